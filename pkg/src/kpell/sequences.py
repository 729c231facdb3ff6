"""The k-Pell family of integer sequences and their exact evaluation routes.

All four sequences satisfy the same second-order recurrence

    x_n = 2*x_{n-1} + k*x_{n-2},    k >= 1,

and differ only in their first two terms:

    P (Pell):           0, 1
    Q (Pell-Lucas):     2, 2
    q (modified Pell):  1, 1
    G (generalized):    a, a        (a >= 1; a = 1 gives q)

Beyond the plain recurrence this module provides root-power (Binet-style)
evaluation in Q(sqrt(1+k)), inter-sequence conversions, an index-addition
rule, and an O(log n) doubling evaluator for P.  Every route is exact; a
route that would silently leave the integers raises ExactnessError instead.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from itertools import islice
from typing import Iterator

from .quadratic import QuadNum, quad_roots

DEFAULT_GUARD_N = 10_000_000
GUARD_ENV_VAR = "KPELL_GUARD_N"


class ExactnessError(ArithmeticError):
    """An exact route produced a non-integer where an integer is forced."""


@unique
class SeqKind(Enum):
    """The four members of the family, keyed by their conventional letters."""

    PELL = "P"
    PELL_LUCAS = "Q"
    MODIFIED_PELL = "q"
    GEN_PELL = "G"


@dataclass(frozen=True)
class SeqParams:
    """Sequence parameters: the recurrence weight k and the seed scale a.

    ``a`` only matters for ``SeqKind.GEN_PELL``; the other kinds ignore it.
    """

    k: int
    a: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not isinstance(self.a, int) or self.a < 1:
            raise ValueError(f"a must be a positive integer, got {self.a!r}")


def initial_pair(kind: SeqKind, params: SeqParams) -> tuple[int, int]:
    """The terms at indices 0 and 1."""
    if kind is SeqKind.PELL:
        return 0, 1
    if kind is SeqKind.PELL_LUCAS:
        return 2, 2
    if kind is SeqKind.MODIFIED_PELL:
        return 1, 1
    return params.a, params.a


def recurrence_guard() -> int:
    """Largest index the O(n) routes will accept (KPELL_GUARD_N overrides)."""
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw is None:
        return DEFAULT_GUARD_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{GUARD_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{GUARD_ENV_VAR} must be nonnegative, got {value}")
    return value


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a nonnegative integer, got {n!r}")


def term_stream(kind: SeqKind, params: SeqParams) -> Iterator[int]:
    """Lazily yield the sequence from index 0 onward."""
    prev, cur = initial_pair(kind, params)
    k = params.k
    while True:
        yield prev
        prev, cur = cur, 2 * cur + k * prev


def term(kind: SeqKind, params: SeqParams, n: int) -> int:
    """The n-th term by direct recurrence (O(n), guarded by KPELL_GUARD_N)."""
    _check_index(n)
    guard = recurrence_guard()
    if n > guard:
        raise ValueError(
            f"n={n} exceeds the O(n) evaluation guard of {guard}; "
            f"set {GUARD_ENV_VAR} to raise it, or use the doubling route"
        )
    prev, cur = initial_pair(kind, params)
    for _ in range(n):
        prev, cur = cur, 2 * cur + params.k * prev
    return prev


def prefix(kind: SeqKind, params: SeqParams, count: int) -> list[int]:
    """The first ``count`` terms (indices 0 .. count-1)."""
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    return list(islice(term_stream(kind, params), count))


def _as_int(value: QuadNum, route: str) -> int:
    if value.root_coeff or value.rational_part.denominator != 1:
        raise ExactnessError(f"{route} produced the non-integer {value}")
    return int(value.rational_part)


def pell_binet(k: int, n: int) -> int:
    """P by root powers: (r1**n - r2**n) / (r1 - r2), exactly in Q(sqrt(1+k)).

    Works uniformly whether 1+k is a perfect square or not; the root
    difference is nonzero in both cases.
    """
    _check_index(n)
    r1, r2 = quad_roots(k)
    return _as_int((r1**n - r2**n) / (r1 - r2), "pell_binet")


def gen_binet(params: SeqParams, n: int) -> int:
    """G by root powers: a * (r1**n + r2**n) / 2."""
    _check_index(n)
    r1, r2 = quad_roots(params.k)
    value = (r1**n + r2**n) * Fraction(params.a, 2)
    return _as_int(value, "gen_binet")


def gen_from_lucas(params: SeqParams, n: int) -> int:
    """G via the Pell-Lucas sequence: G_n = a * Q_n / 2."""
    _check_index(n)
    doubled = params.a * term(SeqKind.PELL_LUCAS, params, n)
    if doubled % 2:
        raise ExactnessError(f"a*Q_{n} = {doubled} is odd; conversion to G failed")
    return doubled // 2


def gen_from_pell(params: SeqParams, n: int) -> int:
    """G via Pell terms: G_n = a*P_n + a*k*P_{n-1}, valid for n >= 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"the Pell conversion needs n >= 1, got {n!r}")
    p_prev, p_cur = prefix(SeqKind.PELL, params, n + 1)[-2:]
    return params.a * p_cur + params.a * params.k * p_prev


def pell_addition(k: int, n: int, m: int) -> int:
    """P_{n+m} from terms near n and m: k*P_{n-1}*P_m + P_n*P_{m+1}."""
    params = SeqParams(k)
    if not (isinstance(n, int) and isinstance(m, int) and n >= 1 and m >= 1):
        raise ValueError(f"index addition needs n, m >= 1, got n={n!r}, m={m!r}")
    pn_prev, pn = prefix(SeqKind.PELL, params, n + 1)[-2:]
    pm, pm_next = prefix(SeqKind.PELL, params, m + 2)[-2:]
    return k * pn_prev * pm + pn * pm_next


def pell_fast(k: int, n: int) -> tuple[int, int]:
    """(P_n, P_{n+1}) in O(log n) big-integer multiplications.

    Walks the bits of n from the most significant down, maintaining the
    pair (u, v) = (P_m, P_{m+1}) and doubling the index with

        P_{2m}   = 2*u*(v - u)
        P_{2m+1} = v*v + k*u*u

    (index addition at m + m and m + (m+1), using k*P_{m-1} = v - 2*u),
    then stepping one index further when the bit is set.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    _check_index(n)
    u, v = 0, 1
    for shift in range(n.bit_length() - 1, -1, -1):
        even = 2 * u * (v - u)
        odd = v * v + k * u * u
        if (n >> shift) & 1:
            u, v = odd, 2 * odd + k * even
        else:
            u, v = even, odd
    return u, v
