"""Command-line front end.

Commands: jtable (print the triangle), verify (run an identity battery),
query (one exact object), export (CSV / LaTeX dumps).  Exit codes are a
stable contract: 0 success, 1 a mathematical identity failed, 2 usage
error, 3 enumeration cap exceeded.  Output is byte-deterministic for fixed
flags and seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .exactpoly import UniPoly, json_coeff_list, poly_text
from .qcalc import qbinomial
from .qstirling import (qstirling1, qstirling1_triangle, qstirling2,
                        qstirling2_triangle, stirling_suite_report)
from .symfunc import symfunc_suite_report
from .jpoly import (build_jtable, jpoly_suite_report, jtable_csv_rows,
                    jtable_latex, latex_poly, reciprocal)
from .oracles import (DEFAULT_CAP, EnumerationCapExceeded, forests_json_lines,
                      forest_enumerator_poly, make_ranking, oracle_suite_report,
                      parking_enumerator_poly)

EXIT_OK = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _add_common(parser):
    parser.add_argument("--format", choices=["plain", "json", "csv", "latex"],
                        default="plain")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="enumeration candidate cap")
    parser.add_argument("--ascii", action=argparse.BooleanOptionalAction,
                        default=True,
                        help="render powers as q^2; --no-ascii uses superscripts")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qsym",
        description="Exact q-analog toolkit: q-Stirling triangles, q-analogs "
                    "of symmetric power-type sums, and tree-inversion / "
                    "parking-function enumerator polynomials with brute-force "
                    "combinatorial certifiers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_jtable = sub.add_parser("jtable", help="print the J triangle")
    p_jtable.add_argument("--n-max", type=int, required=True)
    p_jtable.add_argument("--reciprocal", action="store_true")
    _add_common(p_jtable)

    p_verify = sub.add_parser("verify", help="run an identity battery")
    p_verify.add_argument("suite",
                          choices=["qstirling", "symfunc", "jpoly", "oracles", "all"])
    p_verify.add_argument("--n-max", type=int, default=7)
    _add_common(p_verify)

    p_query = sub.add_parser("query", help="print one exact object")
    p_query.add_argument("kind",
                         choices=["jpoly", "qstirling2", "qstirling1",
                                  "qbinomial", "parking", "forest-stat"])
    p_query.add_argument("--n", type=int)
    p_query.add_argument("--r", type=int)
    p_query.add_argument("--k", type=int)
    p_query.add_argument("--m", type=int)
    p_query.add_argument("--roots", type=str,
                         help="comma-separated root labels, e.g. 1,3")
    p_query.add_argument("--ranking", default="increasing",
                         help="increasing, decreasing, or seeded")
    p_query.add_argument("--variant", choices=["standard", "reciprocal"],
                         default="standard")
    p_query.add_argument("--dump-forests", action="store_true",
                         help="stream accepted forests as JSON lines")
    _add_common(p_query)

    p_export = sub.add_parser("export", help="dump tables to CSV or LaTeX")
    p_export.add_argument("what", choices=["jtable", "stirling"])
    p_export.add_argument("--n-max", type=int, required=True)
    p_export.add_argument("--kind", choices=["first", "second"], default="second",
                          help="stirling triangle kind")
    p_export.add_argument("--reciprocal", action="store_true")
    p_export.add_argument("-o", "--output", default="-",
                          help="output file, - for stdout")
    _add_common(p_export)

    return parser


def _render_poly(poly: UniPoly, args) -> str:
    if args.format == "json":
        return poly.to_json()
    if args.format == "latex":
        return f"${latex_poly(poly)}$"
    if args.format == "csv":
        d = poly.degree()
        return f"{d if d is not None else ''},{json_coeff_list(poly)}"
    return poly_text(poly, superscripts=not args.ascii)


def _cmd_jtable(args, out) -> int:
    if args.n_max < 1:
        raise ValueError("--n-max must be >= 1")
    table = build_jtable(args.n_max)
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "r", "degree", "coeffs"])
        for row in jtable_csv_rows(table, use_reciprocal=args.reciprocal):
            writer.writerow(row)
    elif args.format == "latex":
        out.write(jtable_latex(table, use_reciprocal=args.reciprocal) + "\n")
    elif args.format == "json":
        records = []
        for n in range(1, args.n_max + 1):
            for r in range(1, n + 1):
                poly = (reciprocal(n, r, table) if args.reciprocal
                        else table.entry(n, r))
                records.append({"n": n, "r": r, "degree": table.degree(n, r),
                                "poly": poly.to_json_dict()})
        out.write(json.dumps(records, separators=(",", ":")) + "\n")
    else:
        for n in range(1, args.n_max + 1):
            cells = []
            for r in range(1, n + 1):
                poly = (reciprocal(n, r, table) if args.reciprocal
                        else table.entry(n, r))
                cells.append(poly_text(poly, superscripts=not args.ascii))
            out.write(f"n={n}: " + " | ".join(cells) + "\n")
    return EXIT_OK


def _verify_report(suite: str, n_max: int, seed: int, cap: int):
    if suite == "qstirling":
        return stirling_suite_report(n_max)
    if suite == "symfunc":
        return symfunc_suite_report(min(n_max, 6))
    if suite == "jpoly":
        return jpoly_suite_report(n_max)
    if suite == "oracles":
        return oracle_suite_report(n_max, seed=seed, cap=cap)
    report = stirling_suite_report(n_max)
    report.merge(symfunc_suite_report(min(n_max, 6)))
    report.merge(jpoly_suite_report(n_max))
    report.merge(oracle_suite_report(min(n_max, 7), seed=seed, cap=cap))
    return report


def _cmd_verify(args, out) -> int:
    if args.n_max < 1:
        raise ValueError("--n-max must be >= 1")
    report = _verify_report(args.suite, args.n_max, args.seed, args.cap)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        for line in report.summary_lines():
            out.write(line + "\n")
        if not report.passed:
            bad = report.first_failure
            out.write("first counterexample: "
                      + json.dumps(bad.to_json_dict(), separators=(",", ":"))
                      + "\n")
    return EXIT_OK if report.passed else EXIT_IDENTITY_FAILURE


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"query requires --{name}")


def _cmd_query(args, out) -> int:
    kind = args.kind
    if kind == "jpoly":
        _require(args, "n", "r")
        if not (args.n >= args.r >= 1):
            raise ValueError("need n >= r >= 1")
        table = build_jtable(args.n)
        poly = (reciprocal(args.n, args.r, table) if args.variant == "reciprocal"
                else table.entry(args.n, args.r))
    elif kind == "qstirling2":
        _require(args, "n", "k")
        poly = qstirling2(args.n, args.k)
    elif kind == "qstirling1":
        _require(args, "n", "k")
        if args.n < 1:
            raise ValueError("need n >= 1")
        poly = qstirling1(args.n, args.k)
    elif kind == "qbinomial":
        _require(args, "n", "k")
        poly = qbinomial(args.n, args.k)
    elif kind == "parking":
        _require(args, "m", "r")
        poly = parking_enumerator_poly(args.m, args.r, cap=args.cap)
    else:  # forest-stat
        _require(args, "n")
        if args.roots:
            roots = tuple(int(v) for v in args.roots.split(","))
        elif args.r:
            roots = tuple(range(1, args.r + 1))
        else:
            raise ValueError("forest-stat requires --roots or --r")
        ranking = make_ranking(args.ranking, seed=args.seed)
        if args.dump_forests:
            for line in forests_json_lines(args.n, roots, ranking,
                                           variant=args.variant, cap=args.cap):
                out.write(line + "\n")
        poly = forest_enumerator_poly(args.n, roots, ranking,
                                      variant=args.variant, cap=args.cap)
    out.write(_render_poly(poly, args) + "\n")
    return EXIT_OK


def _cmd_export(args, out) -> int:
    if args.n_max < 1:
        raise ValueError("--n-max must be >= 1")
    buf = io.StringIO()
    if args.what == "jtable":
        table = build_jtable(args.n_max)
        if args.format == "latex":
            buf.write(jtable_latex(table, use_reciprocal=args.reciprocal) + "\n")
        else:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["n", "r", "degree", "coeffs"])
            for row in jtable_csv_rows(table, use_reciprocal=args.reciprocal):
                writer.writerow(row)
    else:
        triangle = (qstirling2_triangle(args.n_max) if args.kind == "second"
                    else qstirling1_triangle(args.n_max))
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "coeffs"])
        for row in triangle.csv_rows():
            writer.writerow(row)
    if args.output == "-":
        out.write(buf.getvalue())
    else:
        with open(args.output, "w") as fh:
            fh.write(buf.getvalue())
    return EXIT_OK


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "jtable":
            return _cmd_jtable(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "query":
            return _cmd_query(args, out)
        return _cmd_export(args, out)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
