"""Command line entry point: ``qcong expand | verify | oracle | crosscheck | scan``."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import List, Optional

from . import harness, oracle
from .dsl import DSLError, evaluate, parse_expr, unparse
from .series import SeriesError


def _emit_rows(rows, header, fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    else:
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
                  for i, h in enumerate(header)]
        out.write("  ".join(str(h).rjust(w) for h, w in zip(header, widths)) + "\n")
        for r in rows:
            out.write("  ".join(str(v).rjust(w) for v, w in zip(r, widths)) + "\n")


def cmd_expand(args, out) -> int:
    expr = parse_expr(args.expr)
    s = evaluate(expr, args.N, modulus=args.mod)
    coeffs = list(s.coeffs) if s.modulus is not None else list(s.signed_coeffs())
    if args.format == "json":
        json.dump({"expr": unparse(expr), "precision": s.precision, "modulus": s.modulus,
                   "coeffs": coeffs}, out)
        out.write("\n")
    else:
        _emit_rows(list(enumerate(coeffs)), ("n", "coeff"), args.format, out)
    if args.figure:
        from .plotting import plot_coefficients
        plot_coefficients(s, args.figure, unparse(expr))
    return 0


def _status(r) -> str:
    if r.passed:
        return "PASS"
    return "XFAIL" if r.experimental else "FAIL"


def cmd_verify(args, out) -> int:
    report = harness.run_catalog(args.files or None, args.N, args.filter, args.jobs)
    if args.json:
        out.write(report.to_json() + "\n")
    else:
        for r in report.results:
            mod = f"mod {r.modulus}" if r.modulus else "exact"
            line = f"{_status(r):5}  {r.name}  [{r.kind}, {mod}, N={r.precision}]  {r.millis:.1f} ms"
            if not r.passed:
                if r.error:
                    line += f"  error: {r.error}"
                else:
                    line += (f"  first failure at n={r.first_fail_index}:"
                             f" lhs {r.lhs_coeff}, rhs {r.rhs_coeff}")
            out.write(line + "\n")
        s = report.summary()
        out.write(f"{s['passed']}/{s['checked']} passed, {s['failed']} failed, "
                  f"{s['experimental']} experimental ({s['experimental_failed']} failing)"
                  f" in {s['millis'] / 1000:.2f} s\n")
    if args.figure:
        from .plotting import plot_report
        plot_report(report, args.figure)
    return report.exit_status


def cmd_oracle(args, out) -> int:
    table = oracle.oracle_table(args.family, args.max)
    _emit_rows(table, ("n", args.family), args.format, out)
    return 0


def cmd_crosscheck(args, out) -> int:
    report = harness.crosscheck(args.family, args.max)
    for r in report.mismatches:
        out.write(f"MISMATCH n={r.n}: enumeration {r.oracle}, series {r.series} ({r.source})\n")
    out.write(f"{args.family} up to {args.max}: {len(report.rows)} values, "
              f"{len(report.mismatches)} mismatches\n")
    if args.figure:
        from .plotting import plot_crosscheck
        plot_crosscheck(report, args.figure)
    return 0 if report.passed else 1


def cmd_scan(args, out) -> int:
    result = harness.scan_congruences(args.expr, args.mod, args.max_step, args.N)
    if args.json:
        out.write(result.to_json() + "\n")
    else:
        prim = set(result.primitive())
        for h in result.hits:
            mark = "" if h in prim else "  (refines a shorter step)"
            out.write(f"{h.step}n+{h.offset}  {h.witnesses} witnesses{mark}\n")
        out.write(f"{len(result.hits)} progressions vanish mod {args.mod}"
                  f" (steps up to {args.max_step}, N={args.N})\n")
    if args.figure:
        from .plotting import plot_scan
        plot_scan(result, args.figure)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcong", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("expand", help="print the coefficients of an expression")
    e.add_argument("expr")
    e.add_argument("-N", type=int, required=True, help="number of coefficients")
    e.add_argument("--mod", type=int, default=None)
    e.add_argument("--format", choices=("text", "json", "csv"), default="text")
    e.add_argument("--figure", metavar="PATH", help="also write a coefficient plot (PNG)")
    e.set_defaults(func=cmd_expand)

    v = sub.add_parser("verify", help="check catalog statements (shipped catalog if no file)")
    v.add_argument("files", nargs="*")
    v.add_argument("-N", type=int, default=None,
                   help="precision; caps each entry's own [N=...] tag")
    v.add_argument("--filter", default=None, help="only names containing this substring")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.add_argument("--figure", metavar="PATH", help="also write a timing chart (PNG)")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force partition counts")
    o.add_argument("family", choices=harness.FAMILIES)
    o.add_argument("--max", type=int, required=True)
    o.add_argument("--format", choices=("text", "csv"), default="text")
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("crosscheck", help="compare enumeration with the series")
    c.add_argument("family", choices=harness.FAMILIES)
    c.add_argument("--max", type=int, required=True)
    c.add_argument("--figure", metavar="PATH", help="also write a comparison plot (PNG)")
    c.set_defaults(func=cmd_crosscheck)

    s = sub.add_parser("scan", help="find progressions An+B that vanish mod M")
    s.add_argument("expr")
    s.add_argument("--mod", type=int, required=True)
    s.add_argument("--max-step", type=int, required=True)
    s.add_argument("-N", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.add_argument("--figure", metavar="PATH", help="also write a step/offset heatmap (PNG)")
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DSLError, SeriesError, ValueError, OSError) as exc:
        print(f"qcong: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
