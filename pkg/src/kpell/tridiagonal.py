"""Tridiagonal generating matrices and their exact determinants and inverses.

The n x n generating matrix of each sequence has the sequence's second-order
weights on a Toeplitz interior (2 on the diagonal, k above, -1 below) and the
kind-specific pair in its first row; its determinant is the (n+1)-th term.
This module computes determinants by three-term continuants, inverses by the
theta/phi continuant formula for general tridiagonal matrices, closed-form
inverses and cofactor matrices for the P and G families, and exact integer
determinants of arbitrary dense matrices by fraction-free elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .sequences import SeqKind, SeqParams, prefix

Entry = int | Fraction


def _check_entry(x: object) -> Entry:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"exact entries (int or Fraction) required, got {x!r}")
    return x


class Tridiag:
    """A tridiagonal matrix stored as its three bands, 1-indexed like
    the usual a_i / b_i / c_i notation: diag holds a_1..a_n, sup holds
    b_1..b_{n-1}, sub holds c_1..c_{n-1}."""

    __slots__ = ("_diag", "_sup", "_sub")

    def __init__(self, diag: Iterable[Entry], sup: Iterable[Entry] = (), sub: Iterable[Entry] = ()):
        self._diag = tuple(_check_entry(x) for x in diag)
        self._sup = tuple(_check_entry(x) for x in sup)
        self._sub = tuple(_check_entry(x) for x in sub)
        n = len(self._diag)
        if n < 1:
            raise ValueError("a tridiagonal matrix needs at least one row")
        if len(self._sup) != n - 1 or len(self._sub) != n - 1:
            raise ValueError(
                f"band lengths must be {n - 1} for order {n}, "
                f"got sup={len(self._sup)}, sub={len(self._sub)}"
            )

    @property
    def n(self) -> int:
        return len(self._diag)

    @property
    def diag(self) -> tuple[Entry, ...]:
        return self._diag

    @property
    def sup(self) -> tuple[Entry, ...]:
        return self._sup

    @property
    def sub(self) -> tuple[Entry, ...]:
        return self._sub

    def entry(self, i: int, j: int) -> Entry:
        """The (i, j) entry, 1-indexed; zero outside the three bands."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i}, {j}) outside 1..{self.n}")
        if i == j:
            return self._diag[i - 1]
        if j == i + 1:
            return self._sup[i - 1]
        if j == i - 1:
            return self._sub[j - 1]
        return 0

    def to_dense(self) -> "DenseMat":
        n = self.n
        return DenseMat(
            [[self.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tridiag):
            return NotImplemented
        return (self._diag, self._sup, self._sub) == (other._diag, other._sup, other._sub)

    def __hash__(self) -> int:
        return hash((self._diag, self._sup, self._sub))

    def __repr__(self) -> str:
        return f"Tridiag(diag={self._diag!r}, sup={self._sup!r}, sub={self._sub!r})"


class DenseMat:
    """A small square matrix of exact entries (int or Fraction)."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Entry]]):
        rs = tuple(tuple(_check_entry(x) for x in row) for row in rows)
        if not rs:
            raise ValueError("a matrix needs at least one row")
        if any(len(row) != len(rs) for row in rs):
            raise ValueError("square matrix required")
        self._rows = rs

    @classmethod
    def identity(cls, n: int) -> "DenseMat":
        if n < 1:
            raise ValueError(f"order must be >= 1, got {n}")
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Entry, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Entry:
        """The (i, j) entry, 1-indexed."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i}, {j}) outside 1..{self.n}")
        return self._rows[i - 1][j - 1]

    def __mul__(self, other: object) -> "DenseMat":
        if not isinstance(other, DenseMat):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"order mismatch: {self.n} vs {other.n}")
        cols = list(zip(*other._rows))
        return DenseMat(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMat):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"DenseMat({[list(r) for r in self._rows]!r})"


@dataclass(frozen=True)
class ThetaPhi:
    """Leading and trailing continuants of a tridiagonal matrix.

    theta[i] is the determinant of the leading i x i principal minor
    (theta[0] = 1); phi is indexed so that phi_at(j) is the determinant of
    the trailing minor on rows/columns j..n (phi_at(n+1) = 1).
    """

    theta: tuple[Entry, ...]
    phi: tuple[Entry, ...]

    def theta_at(self, i: int) -> Entry:
        if not 0 <= i < len(self.theta):
            raise IndexError(f"theta index {i} outside 0..{len(self.theta) - 1}")
        return self.theta[i]

    def phi_at(self, j: int) -> Entry:
        if not 1 <= j <= len(self.phi):
            raise IndexError(f"phi index {j} outside 1..{len(self.phi)}")
        return self.phi[j - 1]

    @property
    def determinant(self) -> Entry:
        return self.theta[-1]


def gen_matrix(kind: SeqKind, params: SeqParams, n: int) -> Tridiag:
    """The n x n generating matrix whose determinant is the (n+1)-th term.

    First row starts (x_2, k*x_1/...) with the kind's own pair; every later
    row is (-1, 2, k).
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n!r}")
    k, a = params.k, params.a
    if kind is SeqKind.PELL:
        d0, b0 = 2, k
    elif kind is SeqKind.PELL_LUCAS:
        d0, b0 = 2 * k + 4, 2 * k
    elif kind is SeqKind.MODIFIED_PELL:
        d0, b0 = k + 2, k
    else:
        d0, b0 = a * k + 2 * a, a * k
    diag = (d0,) + (2,) * (n - 1)
    sup = ((b0,) + (k,) * (n - 2)) if n > 1 else ()
    sub = (-1,) * (n - 1)
    return Tridiag(diag, sup, sub)


def det_continuant(t: Tridiag) -> Entry:
    """Determinant by the three-term continuant recurrence, O(n) exact ops."""
    prev: Entry = 1
    cur: Entry = t.diag[0]
    for i in range(1, t.n):
        prev, cur = cur, t.diag[i] * cur - t.sup[i - 1] * t.sub[i - 1] * prev
    return cur


def theta_phi(t: Tridiag) -> ThetaPhi:
    """Both continuant families, forward (theta) and backward (phi)."""
    n = t.n
    theta: list[Entry] = [1, t.diag[0]]
    for i in range(2, n + 1):
        theta.append(t.diag[i - 1] * theta[i - 1] - t.sup[i - 2] * t.sub[i - 2] * theta[i - 2])
    phi: list[Entry] = [0] * (n + 1)
    phi[n] = 1
    phi[n - 1] = t.diag[n - 1]
    for j in range(n - 1, 0, -1):
        phi[j - 1] = t.diag[j - 1] * phi[j] - t.sup[j - 1] * t.sub[j - 1] * phi[j + 1]
    return ThetaPhi(tuple(theta), tuple(phi))


def usmani_inverse(t: Tridiag) -> DenseMat:
    """The exact inverse of a nonsingular tridiagonal matrix.

    Entry (i, j) is a ratio of continuants times a run of off-diagonal band
    entries:

        i < j:  (-1)**(i+j) * b_i*...*b_{j-1} * theta_{i-1} * phi_{j+1} / det
        i == j:                               theta_{i-1} * phi_{i+1} / det
        i > j:  (-1)**(i+j) * c_j*...*c_{i-1} * theta_{j-1} * phi_{i+1} / det
    """
    tp = theta_phi(t)
    det = tp.determinant
    if det == 0:
        raise ValueError("matrix is singular")
    n = t.n
    out: list[list[Entry]] = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        out[i - 1][i - 1] = Fraction(tp.theta_at(i - 1) * tp.phi_at(i + 1)) / det
        run: Entry = 1
        for j in range(i + 1, n + 1):
            run = run * t.sup[j - 2]
            sign = -1 if (i + j) % 2 else 1
            out[i - 1][j - 1] = Fraction(sign * run * tp.theta_at(i - 1) * tp.phi_at(j + 1)) / det
    for j in range(1, n + 1):
        run = 1
        for i in range(j + 1, n + 1):
            run = run * t.sub[i - 2]
            sign = -1 if (i + j) % 2 else 1
            out[i - 1][j - 1] = Fraction(sign * run * tp.theta_at(j - 1) * tp.phi_at(i + 1)) / det
    return DenseMat(out)


def tridiag_apply(t: Tridiag, m: DenseMat) -> DenseMat:
    """The product t @ m in O(n^2), using the band structure of t."""
    n = t.n
    if m.n != n:
        raise ValueError(f"order mismatch: {n} vs {m.n}")
    rows = m.rows
    out: list[list[Entry]] = []
    for i in range(n):
        acc = [t.diag[i] * x for x in rows[i]]
        if i > 0:
            c = t.sub[i - 1]
            acc = [s + c * x for s, x in zip(acc, rows[i - 1])]
        if i < n - 1:
            b = t.sup[i]
            acc = [s + b * x for s, x in zip(acc, rows[i + 1])]
        out.append(acc)
    return DenseMat(out)


def pell_inverse_closed(k: int, n: int) -> DenseMat:
    """Closed-form inverse of the Pell generating matrix, entrywise.

    With det = P_{k,n+1}:

        i <= j:  (-1)**(i+j) * k**(j-i) * P_i * P_{n-j+1} / det
        i >  j:  P_j * P_{n-i+1} / det
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n!r}")
    P = prefix(SeqKind.PELL, SeqParams(k), n + 2)
    det = P[n + 1]
    out: list[list[Entry]] = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i <= j:
                sign = -1 if (i + j) % 2 else 1
                num = sign * k ** (j - i) * P[i] * P[n - j + 1]
            else:
                num = P[j] * P[n - i + 1]
            out[i - 1][j - 1] = Fraction(num, det)
    return DenseMat(out)


def gen_pell_inverse_closed(params: SeqParams, n: int) -> DenseMat:
    """Closed-form inverse of the generalized matrix; the first row and
    column carry the seed scale a separately.

    With det = G_{k,n+1}:

        1 = i < j:  (-1)**(j+1) * a * k**(j-1) * P_{n-j+1} / det
        1 < i <= j: (-1)**(i+j) * k**(j-i) * G_i * P_{n-j+1} / det
        i >= j = 1: P_{n-i+1} / det
        i > j > 1:  G_j * P_{n-i+1} / det
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix order must be >= 1, got {n!r}")
    k, a = params.k, params.a
    P = prefix(SeqKind.PELL, params, n + 1)
    G = prefix(SeqKind.GEN_PELL, params, n + 2)
    det = G[n + 1]
    out: list[list[Entry]] = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == 1 and j > 1:
                sign = -1 if (j + 1) % 2 else 1
                num = sign * a * k ** (j - 1) * P[n - j + 1]
            elif 1 < i <= j:
                sign = -1 if (i + j) % 2 else 1
                num = sign * k ** (j - i) * G[i] * P[n - j + 1]
            elif j == 1:
                num = P[n - i + 1]
            else:
                num = G[j] * P[n - i + 1]
            out[i - 1][j - 1] = Fraction(num, det)
    return DenseMat(out)


def pell_cofactor(k: int, n: int) -> DenseMat:
    """The matrix of cofactors of the Pell generating matrix, n >= 2.

        i >= j:  (-1)**(i+j) * k**(i-j) * P_j * P_{n-i+1}
        i <  j:  P_i * P_{n-j+1}
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"cofactor matrices need n >= 2, got {n!r}")
    P = prefix(SeqKind.PELL, SeqParams(k), n + 1)
    out: list[list[Entry]] = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i >= j:
                sign = -1 if (i + j) % 2 else 1
                out[i - 1][j - 1] = sign * k ** (i - j) * P[j] * P[n - i + 1]
            else:
                out[i - 1][j - 1] = P[i] * P[n - j + 1]
    return DenseMat(out)


def gen_pell_cofactor(params: SeqParams, n: int) -> DenseMat:
    """The matrix of cofactors of the generalized matrix, n >= 2.

        i > j = 1:  (-1)**(i+1) * a * k**(i-1) * P_{n-i+1}
        i >= j > 1: (-1)**(i+j) * k**(i-j) * G_j * P_{n-i+1}
        1 = i <= j: P_{n-j+1}
        1 < i < j:  G_i * P_{n-j+1}
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"cofactor matrices need n >= 2, got {n!r}")
    k, a = params.k, params.a
    P = prefix(SeqKind.PELL, params, n + 1)
    G = prefix(SeqKind.GEN_PELL, params, n + 1)
    out: list[list[Entry]] = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i > 1 and j == 1:
                sign = -1 if (i + 1) % 2 else 1
                out[i - 1][j - 1] = sign * a * k ** (i - 1) * P[n - i + 1]
            elif i >= j and j > 1:
                sign = -1 if (i + j) % 2 else 1
                out[i - 1][j - 1] = sign * k ** (i - j) * G[j] * P[n - i + 1]
            elif i == 1:
                out[i - 1][j - 1] = P[n - j + 1]
            else:
                out[i - 1][j - 1] = G[i] * P[n - j + 1]
    return DenseMat(out)


def bareiss_det(m: DenseMat) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination.

    Every division below is exact (each 2x2 cross term is divisible by the
    previous pivot), so the computation never leaves the integers.  Row
    swaps flip the sign; a column with no pivot means the determinant is 0.
    """
    a: list[list[int]] = []
    for row in m.rows:
        out_row = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"integer entries required, got {x}")
                x = int(x)
            out_row.append(x)
        a.append(out_row)
    n = len(a)
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if a[r][col]), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            sign = -sign
        pivot = a[col][col]
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                a[r][c] = (pivot * a[r][c] - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = pivot
    return sign * a[-1][-1]


def entry_strings(m: DenseMat | Tridiag) -> list[list[str]]:
    """All entries as exact decimal/ratio strings, row-major."""
    dense = m.to_dense() if isinstance(m, Tridiag) else m
    return [[str(x) for x in row] for row in dense.rows]


def render_grid(rows: Sequence[Sequence[str]]) -> str:
    """Column-aligned text rendering of a grid of strings."""
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
    return "\n".join(lines)
