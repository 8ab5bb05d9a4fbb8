"""Command-line front end: point queries, verification sweeps, reports.

Exit codes are stable: 0 success, 2 usage/parse/precondition failure,
3 cross-method disagreement or integrality failure, 4 sweep with failures.
Rationals serialize as "num/den" strings in lowest terms (bare "num" when
the denominator is 1); integers that can exceed 2**53 are emitted as
decimal strings so JSON consumers never see a lossy float.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable

from .arith import generalized_gcd, jordan_totient, mobius, omega
from .crsum import (
    CHECKED_DIRECT_GUARD,
    DIRECT_GUARD,
    CrossCheckError,
    CrsQuery,
    DirectRoundingError,
    crs,
    crs_direct,
    crs_hoelder,
    crs_mobius,
    crs_multiplicative,
)
from .expansions import MobiusSpec, partial_expansion
from .identities import (
    delange_bound,
    divisor_abs_sum,
    divisor_sum_record,
    equality_case_holds,
    grytczuk_value,
    orthogonality_sum,
    s_kn_closed_form,
    s_kn_mobius,
)

_JSON_SAFE = 2**53


def _json_int(value: int):
    """Ints beyond 2**53 become decimal strings; smaller ones stay numbers."""
    return value if abs(value) <= _JSON_SAFE else str(value)


def _frac_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _emit_json(obj, out: str | None) -> None:
    _emit(json.dumps(obj, separators=(",", ":")), out)


# ----------------------------------------------------------------------
# Verification sweeps
# ----------------------------------------------------------------------

# check name -> fn(k, n, s) -> (passed, expected, actual)
CheckFn = Callable[[int, int, int], tuple[bool, str, str]]


def _check_crs_agreement(k: int, n: int, s: int) -> tuple[bool, str, str]:
    query = CrsQuery(k, n, s)
    seen = {
        "mobius": crs_mobius(query).value,
        "multiplicative": crs_multiplicative(query).value,
    }
    if k**s <= CHECKED_DIRECT_GUARD:
        seen["direct"] = crs_direct(query).value
    passed = len(set(seen.values())) == 1
    return passed, str(seen["mobius"]), ",".join(f"{m}={v}" for m, v in seen.items())


def _check_delange_bound(k: int, n: int, s: int) -> tuple[bool, str, str]:
    h = divisor_abs_sum(k, n, s)
    bound = delange_bound(k, n, s)
    return h <= bound, f"<={bound}", str(h)


def _check_grytczuk(k: int, n: int, s: int) -> tuple[bool, str, str]:
    h = divisor_abs_sum(k, n, s)
    closed = grytczuk_value(k, n, s)
    return h == closed, str(closed), str(h)


def _check_orthogonality(k: int, n: int, s: int) -> tuple[bool, str, str]:
    expected = k**s if n % k == 0 else 0
    actual = orthogonality_sum(k, n, s)
    return actual == expected, str(expected), str(actual)


def _check_skn(k: int, n: int, s: int) -> tuple[bool, str, str]:
    reference = abs(crs_multiplicative(CrsQuery(k, n, s)).value)
    inverted = s_kn_mobius(k, n, s)
    closed = s_kn_closed_form(k, n, s)
    passed = inverted == reference and closed == inverted
    return passed, f"abs_crs={reference}", f"mobius={inverted},closed={closed}"


def _check_equality_case(k: int, n: int, s: int) -> tuple[bool, str, str]:
    # Cell n plays the role of m; the claim only covers k multiples of m·rad(m).
    # Off-claim cells pass vacuously but still report whether equality happened,
    # so unexpected equality (n not an s-th power of the cell base) stays visible.
    h = divisor_abs_sum(k, n**s, s)
    bound = n**s * 2 ** omega(k)
    if equality_case_holds(n, k, s):
        return h == bound, str(bound), str(h)
    return True, "(no claim)", "equality" if h == bound else "strict"


CHECKS: dict[str, CheckFn] = {
    "crs-agreement": _check_crs_agreement,
    "delange-bound": _check_delange_bound,
    "grytczuk-equality": _check_grytczuk,
    "orthogonality": _check_orthogonality,
    "skn-consistency": _check_skn,
    "equality-case": _check_equality_case,
}


@dataclass(frozen=True)
class SweepGrid:
    """Inclusive k/n ranges, the s values to visit, and the checks to run."""

    k_range: tuple[int, int]
    n_range: tuple[int, int]
    s_values: tuple[int, ...]
    checks: tuple[str, ...]

    def __post_init__(self) -> None:
        for name, (lo, hi) in (("k", self.k_range), ("n", self.n_range)):
            if lo < 1 or hi < lo:
                raise ValueError(f"empty or invalid {name} range {lo}..{hi}")
        if not self.s_values or any(s < 1 for s in self.s_values):
            raise ValueError("s values must be a non-empty list of positive integers")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown or not self.checks:
            raise ValueError(f"unknown checks: {unknown}" if unknown else "no checks")

    def cells(self):
        for s in self.s_values:
            for k in range(self.k_range[0], self.k_range[1] + 1):
                for n in range(self.n_range[0], self.n_range[1] + 1):
                    yield k, n, s


@dataclass
class SweepResult:
    grid: SweepGrid
    cells_total: int
    cells_passed: int
    failures: list[tuple[int, int, int, str, str, str]]
    rows: list[tuple[int, int, int, str, str, str, bool]]


def run_sweep(grid: SweepGrid) -> SweepResult:
    total = 0
    passed = 0
    failures = []
    rows = []
    for k, n, s in grid.cells():
        for name in grid.checks:
            ok, expected, actual = CHECKS[name](k, n, s)
            total += 1
            passed += ok
            rows.append((k, n, s, name, expected, actual, ok))
            if not ok:
                failures.append((k, n, s, name, expected, actual))
    # deterministic regardless of evaluation schedule
    failures.sort(key=lambda f: (f[0], f[1], f[2], f[3]))
    return SweepResult(grid, total, passed, failures, rows)


def _sweep_json(result: SweepResult) -> str:
    obj = {
        "grid": {
            "k_range": list(result.grid.k_range),
            "n_range": list(result.grid.n_range),
            "s_values": list(result.grid.s_values),
            "checks": list(result.grid.checks),
        },
        "cells_total": result.cells_total,
        "cells_passed": result.cells_passed,
        "failures": [
            {"k": k, "n": n, "s": s, "check": c, "expected": e, "actual": a}
            for k, n, s, c, e, a in result.failures
        ],
    }
    return json.dumps(obj, separators=(",", ":"))

def _sweep_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["k", "n", "s", "check", "expected", "actual", "pass"])
    for k, n, s, name, expected, actual, ok in result.rows:
        writer.writerow([k, n, s, name, expected, actual, "true" if ok else "false"])
    return buf.getvalue().rstrip("\n")


# ----------------------------------------------------------------------
# Subcommand handlers
# ----------------------------------------------------------------------

def _direct_guard() -> int:
    raw = os.environ.get("CRSUM_MAX_DIRECT")
    if raw is None:
        return DIRECT_GUARD
    try:
        guard = int(raw, 10)
    except ValueError:
        raise ValueError(f"CRSUM_MAX_DIRECT must be an integer, got {raw!r}") from None
    if guard < 1:
        raise ValueError(f"CRSUM_MAX_DIRECT must be positive, got {guard}")
    return guard


def _cmd_crsum(args: argparse.Namespace) -> int:
    query = CrsQuery(args.q, args.n, args.s)
    guard = _direct_guard()
    if args.method == "auto":
        result = crs(query, checked=args.checked,
                     direct_limit=min(CHECKED_DIRECT_GUARD, guard))
    elif args.method == "direct":
        result = crs_direct(query, max_terms=guard)
    elif args.method == "mobius":
        result = crs_mobius(query)
    elif args.method == "multiplicative":
        result = crs_multiplicative(query)
    else:
        result = crs_hoelder(query)
    if args.checked and args.method != "auto":
        reference = crs_mobius(query).value
        if result.value != reference:
            raise CrossCheckError(
                f"{result.method} gave {result.value}, mobius gave {reference} on {query}"
            )
    if args.json:
        _emit_json(
            {"q": args.q, "n": args.n, "s": args.s,
             "value": _json_int(result.value), "method": result.method},
            args.out,
        )
    else:
        _emit(str(result.value), args.out)
    return 0


def _cmd_jordan(args: argparse.Namespace) -> int:
    value = jordan_totient(args.s, args.n)
    if args.json:
        _emit_json({"n": args.n, "s": args.s, "value": _json_int(value)}, args.out)
    else:
        _emit(str(value), args.out)
    return 0


def _cmd_ggcd(args: argparse.Namespace) -> int:
    value = generalized_gcd(args.a, args.b, args.s)
    if args.json:
        _emit_json(
            {"a": args.a, "b": args.b, "s": args.s, "value": _json_int(value)}, args.out
        )
    else:
        _emit(str(value), args.out)
    return 0


def _cmd_mobius(args: argparse.Namespace) -> int:
    value = mobius(args.n)
    if args.json:
        _emit_json({"n": args.n, "value": value}, args.out)
    else:
        _emit(str(value), args.out)
    return 0


def _cmd_hsum(args: argparse.Namespace) -> int:
    record = divisor_sum_record(args.k, args.n, args.s)
    if args.json:
        _emit_json(
            {
                "k": record.k, "n": record.n, "s": record.s,
                "value": _json_int(record.h_value),
                "delange_bound": _json_int(record.delange_bound),
                "grytczuk_value": _json_int(record.grytczuk_value),
            },
            args.out,
        )
    else:
        _emit(str(record.h_value), args.out)
    return 0


def _cmd_grytczuk(args: argparse.Namespace) -> int:
    record = divisor_sum_record(args.k, args.n, args.s)
    if args.json:
        _emit_json(
            {
                "k": record.k, "n": record.n, "s": record.s,
                "value": _json_int(record.grytczuk_value),
                "divisor_abs_sum": _json_int(record.h_value),
            },
            args.out,
        )
    else:
        _emit(str(record.grytczuk_value), args.out)
    return 0


def _cmd_skn(args: argparse.Namespace) -> int:
    inverted = s_kn_mobius(args.k, args.n, args.s)
    if args.json:
        reference = abs(crs_multiplicative(CrsQuery(args.k, args.n, args.s)).value)
        _emit_json(
            {
                "k": args.k, "n": args.n, "s": args.s,
                "value": _json_int(inverted),
                "closed_form": _json_int(s_kn_closed_form(args.k, args.n, args.s)),
                "closed_form_plain_gcd": _json_int(
                    s_kn_closed_form(args.k, args.n, args.s, plain_gcd=True)
                ),
                "abs_crs": _json_int(reference),
            },
            args.out,
        )
    else:
        _emit(str(inverted), args.out)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    grid = SweepGrid(
        k_range=(args.k_min, args.k_max),
        n_range=(args.n_min, args.n_max),
        s_values=tuple(args.s),
        checks=tuple(args.checks),
    )
    result = run_sweep(grid)
    report = _sweep_csv(result) if args.format == "csv" else _sweep_json(result)
    _emit(report, args.out)
    if args.out:
        print(
            f"{result.cells_passed}/{result.cells_total} checks passed; "
            f"{len(result.failures)} failures; report written to {args.out}"
        )
    return 0 if not result.failures else 4


def _cmd_expand(args: argparse.Namespace) -> int:
    try:
        text = Path(args.spec_file).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {args.spec_file}: {exc}") from None
    spec = MobiusSpec.from_text(text)
    report = partial_expansion(spec, args.n, args.s, args.q_max)
    _emit_json(
        {
            "label": spec.label,
            "support_bound": spec.support_bound,
            "n": report.n,
            "s": report.s,
            "q_max": report.q_max,
            "coefficients": {str(q): _frac_str(a) for q, a in report.coefficients.items()},
            "partial_sum": _frac_str(report.partial_sum),
            "target": _frac_str(report.target),
            "residual": _frac_str(report.residual),
            "condition_sum": _frac_str(report.condition_sum),
        },
        args.out,
    )
    return 0


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------

def _positive(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a JSON object instead of the bare value")
    common.add_argument("--out", metavar="PATH",
                        help="write the output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="crsums",
        description="Exact Cohen-Ramanujan sums, divisor-sum identities, "
                    "and finite-support expansion checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("crsum", parents=[common], help="evaluate c_q^(s)(n)")
    p.add_argument("q", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--method", default="auto",
                   choices=("auto", "direct", "mobius", "multiplicative", "hoelder"))
    p.add_argument("--checked", action="store_true",
                   help="cross-verify against independent evaluators (exit 3 on mismatch)")
    p.set_defaults(func=_cmd_crsum)

    p = sub.add_parser("jordan", parents=[common], help="Jordan totient J_s(n)")
    p.add_argument("n", type=_positive)
    p.add_argument("--s", type=_positive, default=1)
    p.set_defaults(func=_cmd_jordan)

    p = sub.add_parser("ggcd", parents=[common],
                       help="generalized gcd (a,b)_s, returned as the s-th power d**s")
    p.add_argument("a", type=_positive)
    p.add_argument("b", type=_positive)
    p.add_argument("--s", type=_positive, default=1)
    p.set_defaults(func=_cmd_ggcd)

    p = sub.add_parser("mobius", parents=[common], help="Möbius function μ(n)")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=_cmd_mobius)

    p = sub.add_parser("hsum", parents=[common],
                       help="divisor absolute sum Σ_{q|k} |c_q^(s)(n)|")
    p.add_argument("k", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--s", type=_positive, default=1)
    p.set_defaults(func=_cmd_hsum)

    p = sub.add_parser("grytczuk", parents=[common],
                       help="closed form 2**w(k^s/(k^s,n)_s)·(k^s,n)_s of the divisor sum")
    p.add_argument("k", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--s", type=_positive, default=1)
    p.set_defaults(func=_cmd_grytczuk)

    p = sub.add_parser("skn", parents=[common],
                       help="Möbius-inverted divisor sum S(k,n) = |c_k^(s)(n)|")
    p.add_argument("k", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--s", type=_positive, default=1)
    p.set_defaults(func=_cmd_skn)

    p = sub.add_parser("sweep", parents=[common],
                       help="run identity checks over a (k, n, s) grid")
    p.add_argument("--k-min", type=_positive, default=1)
    p.add_argument("--k-max", type=_positive, default=50)
    p.add_argument("--n-min", type=_positive, default=1)
    p.add_argument("--n-max", type=_positive, default=50)
    p.add_argument("--s", type=_positive, nargs="+", default=[1, 2, 3])
    p.add_argument("--checks", nargs="+", choices=sorted(CHECKS), default=sorted(CHECKS))
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("expand", parents=[common],
                       help="expand an arithmetical function from a Möbius-transform file")
    p.add_argument("spec_file")
    p.add_argument("n", type=_positive)
    p.add_argument("--s", type=_positive, default=1)
    p.add_argument("--q-max", type=_positive, default=None)
    p.set_defaults(func=_cmd_expand)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CrossCheckError, DirectRoundingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
