"""``specpoly`` command-line interface."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Callable, Sequence

from . import chebylucas, cycloring, minpoly, theorems
from .cyclotomic import cyclotomic
from .numtheory import nu
from .polyz import IntPoly, eval_int, to_json_list, to_pretty

POLY_FAMILIES: dict[str, Callable[[int], IntPoly]] = {
    "lucas": chebylucas.lucas,
    "spread": chebylucas.spread,
    "cyclo": cyclotomic,
    "psi": minpoly.psi,
    "phi": minpoly.phi_min,
    "Phi": minpoly.phi_big,
}


class UsageError(Exception):
    pass


def _emit_poly(n: int, p: IntPoly, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps({"n": n, "poly": to_json_list(p)}), file=out)
    else:
        print(to_pretty(p), file=out)


def _cmd_poly(args, out) -> int:
    try:
        p = POLY_FAMILIES[args.command](args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit_poly(args.n, p, args.format, out)
    return 0


def _cmd_spread_table(args, out) -> int:
    rows = []
    for n in range(args.max + 1):
        direct = [chebylucas.spread_value_direct(n, k) for k in range(5)]
        periodic = [chebylucas.spread_value(n, k) for k in range(5)]
        if direct != periodic:
            print(f"mismatch at n={n}: direct {direct} vs periodic {periodic}", file=sys.stderr)
            return 1
        rows.append([n, *periodic])
    if args.format == "json":
        print(json.dumps([dict(zip(("n", "Z_n_0", "Z_n_1", "Z_n_2", "Z_n_3", "Z_n_4"), r)) for r in rows]), file=out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "Z_n_0", "Z_n_1", "Z_n_2", "Z_n_3", "Z_n_4"])
        w.writerows(rows)
    else:
        for k in range(5):
            print(f"Z_n({k}): " + ", ".join(str(r[k + 1]) for r in rows), file=out)
    return 0


def _cmd_eval(args, out) -> int:
    try:
        p = POLY_FAMILIES[args.family](args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(eval_int(p, args.x), file=out)
    return 0


def _cmd_w(args, out) -> int:
    unit = cycloring.UNIT_NAMES.get(args.unit.lower())
    if unit is None:
        raise UsageError(f"unknown unit {args.unit!r}; expected one of sigma, i, omega, -1")
    try:
        value = cycloring.w_value(args.n, unit)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(" ".join(str(c) for c in value.coords), file=out)
    if value.is_integer():
        print(value.to_int(), file=out)
    return 0


def _cmd_verify(args, out) -> int:
    which = range(1, 6) if args.theorem == "all" else [int(args.theorem)]
    all_ok = True
    for t in which:
        report = theorems.sweep(t, args.max, jobs=args.jobs, method=args.method)
        for row in report.failures:
            print(row, file=out)
        for chk in report.bridge_failures:
            print(chk, file=out)
        status = "PASS" if report.ok else "FAIL"
        print(f"theorem {t}: n in [3, {args.max}], {len(report.rows)} rows, "
              f"{len(report.failures) + len(report.bridge_failures)} failures: {status}", file=out)
        all_ok &= report.ok
    return 0 if all_ok else 1


def _cmd_factorcheck(args, out) -> int:
    failed = [c for c in map(minpoly.check_spread_factorization, range(1, args.max + 1)) if not c]
    for c in failed:
        print(c, file=out)
    print(f"Z_n = prod Phi_d for n in [1, {args.max}]: {'PASS' if not failed else 'FAIL'}", file=out)
    return 0 if not failed else 1


def write_table_csv(rows: Sequence[theorems.TableRow], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(theorems.TABLE_COLUMNS)
    w.writerows(r.as_tuple() for r in rows)


def read_table_csv(text: str) -> list[theorems.TableRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != theorems.TABLE_COLUMNS:
        raise ValueError(f"unexpected columns {reader.fieldnames}")
    return [theorems.TableRow(**{k: int(v) for k, v in rec.items()}) for rec in reader]


def _cmd_table(args, out) -> int:
    rows = theorems.value_table(args.max)
    if args.format == "csv":
        write_table_csv(rows, out)
    elif args.format == "json":
        payload = [dict(zip(theorems.TABLE_COLUMNS, r.as_tuple()), in_theorem_range=r.in_theorem_range)
                   for r in rows]
        print(json.dumps(payload), file=out)
    else:
        header = theorems.TABLE_COLUMNS
        print("  ".join(f"{h:>9}" for h in header), file=out)
        for r in rows:
            line = "  ".join(f"{v:>9}" for v in r.as_tuple())
            print(line + ("" if r.in_theorem_range else "  (outside theorem range)"), file=out)
    return 0


def _cmd_oracle(args, out) -> int:
    n = args.n
    if n < 3:
        raise UsageError(f"n must be >= 3, got {n}")
    exact = minpoly.phi_min(n).coeffs
    approx = minpoly.phi_float_oracle(n)
    worst = max(abs(a - e) / abs(e) for a, e in zip(approx, exact))
    print("exact:  " + to_pretty(minpoly.phi_min(n)), file=out)
    print("float:  " + ", ".join(f"{a:.12g}" for a in approx), file=out)
    print(f"max relative deviation: {worst:.3e}", file=out)
    print(f"sine product: {minpoly.sine_product(n)!r} (v(n) = {nu(n)})", file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specpoly",
        description="Minimal polynomials of 4sin^2(pi/n), cyclotomic identities and their verification.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    for name, helptext in [
        ("lucas", "Lucas polynomial L_N"),
        ("spread", "spread polynomial Z_N"),
        ("cyclo", "cyclotomic polynomial C_N"),
        ("psi", "minimal polynomial of 2cos(2pi/N)"),
        ("phi", "minimal polynomial of 4sin^2(pi/N)"),
        ("Phi", "factor Phi_N of the spread polynomials"),
    ]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("n", type=int, metavar="N")
        p.add_argument("--format", choices=("pretty", "json"), default="pretty")
        p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("spread-table", help="Z_n(k) for k = 0..4, periodic table checked against direct evaluation")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p.set_defaults(func=_cmd_spread_table)

    p = sub.add_parser("eval", help="evaluate a polynomial family member at an integer")
    p.add_argument("family", choices=tuple(POLY_FAMILIES))
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("x", type=int, metavar="X")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("w", help="w(N, z) = C_N(z)/z^(phi(N)/2) in Z[zeta_12]")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("unit", metavar="{sigma|i|omega|-1}")
    p.set_defaults(func=_cmd_w)

    p = sub.add_parser("verify", help="sweep the sign theorems")
    p.add_argument("--theorem", choices=("1", "2", "3", "4", "5", "all"), default="all")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--method", choices=theorems.METHODS, default="lucas")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("factorcheck", help="check Z_n = prod_{d|n} Phi_d")
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=_cmd_factorcheck)

    p = sub.add_parser("table", help="value table of phi at 0..4")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("oracle", help="compare phi_N with its floating-point root product")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=_cmd_oracle)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"specpoly: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
