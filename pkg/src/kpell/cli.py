"""Command-line front end.

Subcommands: ``table`` (symbolic or numeric term tables), ``eval`` (one term
by any evaluation route, cross-checked), ``verify`` (identity sweeps),
``matrix`` (generating matrices and their exact inverses/cofactors),
``eigen`` (the floating-point eigenvalue product report), ``bench`` (timing
with value digests).

Exit codes: 0 success / all-pass, 1 verified failure (identity or eigenvalue
mismatch, internal cross-check), 2 usage error.  Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .closed_forms import eigen_product, gen_double_sum, pell_binomial, symbolic_term
from .poly import poly_str
from .sequences import (
    ExactnessError,
    SeqKind,
    SeqParams,
    gen_binet,
    pell_binet,
    pell_fast,
    prefix,
    recurrence_guard,
    term,
)
from .tridiagonal import (
    entry_strings,
    gen_matrix,
    gen_pell_cofactor,
    pell_cofactor,
    render_grid,
    theta_phi,
    usmani_inverse,
)
from .verify import SweepGrid, expand_selection, run_suite

KINDS = {
    "P": SeqKind.PELL,
    "Q": SeqKind.PELL_LUCAS,
    "q": SeqKind.MODIFIED_PELL,
    "G": SeqKind.GEN_PELL,
}

CROSS_CHECK_LIMIT = 10_000


def _fail_usage(message: str) -> int:
    print(f"kpell: error: {message}", file=sys.stderr)
    return 2


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _parse_params(args: argparse.Namespace, kind: SeqKind) -> SeqParams:
    if args.a is not None and kind is not SeqKind.GEN_PELL:
        raise ValueError("--a applies to kind G only")
    a = args.a if args.a is not None else 1
    return SeqParams(args.k, a)


def _cmd_table(args: argparse.Namespace) -> int:
    kind = KINDS[args.kind]
    if args.n_max < 0:
        return _fail_usage("--n-max must be >= 0")
    if args.symbolic:
        if args.k is not None or args.a is not None:
            return _fail_usage("--symbolic excludes --k/--a")
        if kind not in (SeqKind.PELL, SeqKind.GEN_PELL):
            return _fail_usage("symbolic tables exist for kinds P and G only")
        suffix = "a" if kind is SeqKind.GEN_PELL else ""
        values = [
            poly_str(symbolic_term(kind, n), "k", suffix) for n in range(args.n_max + 1)
        ]
    else:
        if args.k is None:
            return _fail_usage("numeric tables need --k (or pass --symbolic)")
        try:
            params = _parse_params(args, kind)
        except ValueError as exc:
            return _fail_usage(str(exc))
        values = [str(v) for v in prefix(kind, params, args.n_max + 1)]
    if args.format == "json":
        payload: dict = {"kind": args.kind, "symbolic": bool(args.symbolic)}
        if not args.symbolic:
            payload["k"] = args.k
            if kind is SeqKind.GEN_PELL:
                payload["a"] = args.a if args.a is not None else 1
        payload["rows"] = [{"n": n, "value": v} for n, v in enumerate(values)]
        _emit_json(payload)
    else:
        for n, v in enumerate(values):
            print(f"{n}\t{v}")
    return 0


def _eval_dispatch(kind: SeqKind, params: SeqParams, n: int, method: str) -> int:
    if method == "recurrence":
        return term(kind, params, n)
    if method == "fast":
        if kind is not SeqKind.PELL:
            raise ValueError("--method fast applies to kind P only")
        return pell_fast(params.k, n)[0]
    if method == "binet":
        if kind is SeqKind.PELL:
            return pell_binet(params.k, n)
        if kind is SeqKind.GEN_PELL:
            return gen_binet(params, n)
        raise ValueError("--method binet applies to kinds P and G only")
    if method == "binomial":
        if kind is not SeqKind.PELL:
            raise ValueError("--method binomial applies to kind P only")
        if n < 3:
            raise ValueError("--method binomial is defined for n >= 3")
        return pell_binomial(params.k, n - 1)
    if method == "double-sum":
        if kind is not SeqKind.GEN_PELL:
            raise ValueError("--method double-sum applies to kind G only")
        if n < 2:
            raise ValueError("--method double-sum is defined for n >= 2")
        return gen_double_sum(params, n - 1)
    raise ValueError(f"unknown method {method!r}")


def _cmd_eval(args: argparse.Namespace) -> int:
    kind = KINDS[args.kind]
    if args.n < 0:
        return _fail_usage("--n must be >= 0")
    try:
        params = _parse_params(args, kind)
        value = _eval_dispatch(kind, params, args.n, args.method)
    except ValueError as exc:
        return _fail_usage(str(exc))
    if args.method != "recurrence" and args.n <= CROSS_CHECK_LIMIT:
        reference = term(kind, params, args.n)
        if value != reference:
            print(
                f"kpell: internal cross-check failed: method {args.method} gave "
                f"{value}, recurrence gave {reference}",
                file=sys.stderr,
            )
            return 1
    if args.format == "json":
        payload = {"kind": args.kind, "k": args.k}
        if kind is SeqKind.GEN_PELL:
            payload["a"] = params.a
        payload["n"] = args.n
        payload["value"] = str(value)
        _emit_json(payload)
    else:
        print(value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = tuple(part.strip() for part in args.identities.split(",") if part.strip())
    if not names:
        return _fail_usage("--identities must name at least one identity")
    try:
        expand_selection(names)
        grid = SweepGrid(k_max=args.k_max, a_max=args.a_max, n_max=args.n_max)
    except ValueError as exc:
        return _fail_usage(str(exc))
    report = run_suite(grid, names)
    if args.format == "json":
        _emit_json(report.to_dict())
    else:
        print(f"{'identity':<16} {'pass':>8} {'fail':>8}")
        for name, (passed, failed) in report.per_identity().items():
            print(f"{name:<16} {passed:>8} {failed:>8}")
        print(f"{'total':<16} {report.passed:>8} {report.failed:>8}")
        for failure in report.failures:
            inputs = " ".join(f"{key}={val}" for key, val in failure.inputs.items())
            print(f"FAIL {failure.identity_name} {inputs} lhs={failure.lhs} rhs={failure.rhs}")
    return 0 if report.all_passed else 1


def _cmd_matrix(args: argparse.Namespace) -> int:
    kind = KINDS[args.kind]
    if args.n < 1:
        return _fail_usage("--n must be >= 1")
    try:
        params = _parse_params(args, kind)
    except ValueError as exc:
        return _fail_usage(str(exc))
    t = gen_matrix(kind, params, args.n)
    if args.show == "theta-phi":
        tp = theta_phi(t)
        if args.format == "json":
            _emit_json(
                {
                    "n": args.n,
                    "theta": [str(x) for x in tp.theta],
                    "phi": [str(x) for x in tp.phi],
                }
            )
        else:
            print("theta:", " ".join(str(x) for x in tp.theta))
            print("phi:  ", " ".join(str(x) for x in tp.phi))
        return 0
    if args.show == "matrix":
        dense = t.to_dense()
    elif args.show == "inverse":
        dense = usmani_inverse(t)
    else:
        if args.n < 2:
            return _fail_usage("--show cofactor needs --n >= 2")
        if kind is SeqKind.PELL:
            dense = pell_cofactor(params.k, args.n)
        elif kind is SeqKind.GEN_PELL:
            dense = gen_pell_cofactor(params, args.n)
        else:
            return _fail_usage("cofactor matrices exist for kinds P and G only")
    cells = entry_strings(dense)
    if args.format == "json":
        _emit_json({"n": args.n, "entries": cells})
    else:
        print(render_grid(cells))
    return 0


def _cmd_eigen(args: argparse.Namespace) -> int:
    if args.n < 1 or args.k < 1:
        return _fail_usage("--k and --n must be >= 1")
    try:
        report = eigen_product(args.k, args.n, args.paper_verbatim)
    except ValueError as exc:
        return _fail_usage(str(exc))
    print(f"product: {report.product.real:.6f} {report.product.imag:+.6f}i")
    print(f"rounded: {report.rounded}")
    print(f"exact:   {report.exact}")
    print(f"abs residual: {report.abs_residual:.6f}")
    print(f"formula: {'verbatim' if report.paper_verbatim else 'corrected'}")
    return 0 if report.matches else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.n < 0 or args.k < 1 or args.repeat < 1:
        return _fail_usage("need --k >= 1, --n >= 0, --repeat >= 1")
    if args.method == "recurrence" and args.n > recurrence_guard():
        return _fail_usage(
            f"n={args.n} exceeds the recurrence guard {recurrence_guard()}; "
            "use --method fast or raise KPELL_GUARD_N"
        )
    params = SeqParams(args.k)
    for run in range(args.repeat):
        start = time.perf_counter()
        if args.method == "fast":
            value = pell_fast(args.k, args.n)[0]
        else:
            value = term(SeqKind.PELL, params, args.n)
        elapsed = time.perf_counter() - start
        digest = value % (1 << 64)
        print(
            f"method={args.method} k={args.k} n={args.n} run={run} "
            f"time_s={elapsed:.6f} digest={digest}"
        )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpell",
        description="Exact k-Pell family sequences, identities, and matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print terms n = 0..N, symbolic or numeric")
    p_table.add_argument("--kind", choices=sorted(KINDS), required=True)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--symbolic", action="store_true")
    p_table.add_argument("--k", type=int)
    p_table.add_argument("--a", type=int)
    p_table.add_argument("--format", choices=("text", "json"), default="text")
    p_table.set_defaults(func=_cmd_table)

    p_eval = sub.add_parser("eval", help="evaluate one term by a chosen route")
    p_eval.add_argument("--kind", choices=sorted(KINDS), required=True)
    p_eval.add_argument("--k", type=int, required=True)
    p_eval.add_argument("--a", type=int)
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument(
        "--method",
        choices=("recurrence", "binet", "binomial", "double-sum", "fast"),
        default="recurrence",
    )
    p_eval.add_argument("--format", choices=("text", "json"), default="text")
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="sweep identity checks over a grid")
    p_verify.add_argument("--identities", default="all")
    p_verify.add_argument("--k-max", type=int, default=5)
    p_verify.add_argument("--a-max", type=int, default=3)
    p_verify.add_argument("--n-max", type=int, default=30)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_matrix = sub.add_parser("matrix", help="show a generating matrix or derived object")
    p_matrix.add_argument("--kind", choices=sorted(KINDS), required=True)
    p_matrix.add_argument("--k", type=int, required=True)
    p_matrix.add_argument("--a", type=int)
    p_matrix.add_argument("--n", type=int, required=True)
    p_matrix.add_argument(
        "--show", choices=("matrix", "inverse", "cofactor", "theta-phi"), default="matrix"
    )
    p_matrix.add_argument("--format", choices=("text", "json"), default="text")
    p_matrix.set_defaults(func=_cmd_matrix)

    p_eigen = sub.add_parser("eigen", help="eigenvalue-product determinant report")
    p_eigen.add_argument("--k", type=int, required=True)
    p_eigen.add_argument("--n", type=int, required=True)
    p_eigen.add_argument("--paper-verbatim", action="store_true")
    p_eigen.set_defaults(func=_cmd_eigen)

    p_bench = sub.add_parser("bench", help="time an evaluation route, print a digest")
    p_bench.add_argument("--k", type=int, required=True)
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--method", choices=("recurrence", "fast"), default="fast")
    p_bench.add_argument("--repeat", type=int, default=1)
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # terms can run to hundreds of thousands of digits
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExactnessError as exc:
        print(f"kpell: exactness violation: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        return _fail_usage(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
