"""Command line front end.

Subcommands: ``fd``, ``chern``, ``circle``, ``table``, ``eliminate``, ``fine``.
``--format {text,json,csv}`` is accepted before or after the subcommand.

Exit codes: 0 on success, 2 for bad arguments, 3 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from typing import Any, Sequence

from .chow import chern_total_tangent_quadric, f_closed
from .feasibility import (
    InvariantViolation,
    eliminate,
    circle_solutions,
    explain,
)
from .sequences import CrossoverError, factorial, fine_comparison_report

MAX_D = 10000
MAX_CHERN_DIM = 1000
MAX_CIRCLE_D = 200

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _render(columns: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str) -> str:
    if fmt == "json":
        docs = [dict(zip(columns, row)) for row in rows]
        return json.dumps(docs, indent=2) + "\n"
    cells = [[_cell(v) for v in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [len(c) for c in columns]
    for row in cells:
        widths = [max(w, len(v)) for w, v in zip(widths, row)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return ";".join(_cell(v) for v in value)
    return str(value)


def _bounded_int(lo: int, hi: int | None = None):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if value < lo or (hi is not None and value > hi):
            upper = f"..{hi}" if hi is not None else " or more"
            raise argparse.ArgumentTypeError(f"{value} outside {lo}{upper}")
        return value

    return parse


def _d_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if not 1 <= lo <= hi <= MAX_D:
        raise argparse.ArgumentTypeError(f"range must satisfy 1 <= LO <= HI <= {MAX_D}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    formats = ("text", "json", "csv")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=formats, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="abelquad",
        description="Exact computations for abelian varieties in smooth quadrics.",
    )
    parser.add_argument("--format", choices=formats, default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fd", parents=[common], help="values of F_d")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--d", type=_bounded_int(1, MAX_D))
    group.add_argument("--range", type=_d_range, dest="d_range")

    p = sub.add_parser("chern", parents=[common], help="c(T_Q) of a quadric")
    p.add_argument("--dim", type=_bounded_int(1, MAX_CHERN_DIM), required=True)

    p = sub.add_parser("circle", parents=[common], help="integer points of the circle")
    p.add_argument("--d", type=_bounded_int(1, MAX_CIRCLE_D), required=True)

    p = sub.add_parser("table", parents=[common], help="elimination table")
    p.add_argument("--max-d", type=_bounded_int(3, MAX_D), required=True)
    p.add_argument("--extra-rules", action="store_true")

    p = sub.add_parser("eliminate", parents=[common], help="one dimension in detail")
    p.add_argument("--d", type=_bounded_int(1, MAX_D), required=True)
    p.add_argument("--explain", action="store_true")
    p.add_argument("--extra-rules", action="store_true")

    p = sub.add_parser("fine", parents=[common], help="F_n next to Fine numbers")
    p.add_argument("--max", type=_bounded_int(1, MAX_D), required=True, dest="n_max")
    return parser


TABLE_COLUMNS = ("d", "F_d", "2F_d", "2(d+1)!", "verdict", "rules")


def _table_row(rec) -> list[Any]:
    return [
        rec.d,
        rec.f_d,
        rec.max_degree,
        rec.min_degree,
        rec.verdict.value,
        [app.rule_id for app in rec.rules_applied],
    ]


def _run(args: argparse.Namespace) -> str:
    fmt = args.format
    cmd = args.command
    if cmd == "fd":
        lo, hi = args.d_range if args.d_range else (args.d, args.d)
        rows = [[d, f_closed(d)] for d in range(lo, hi + 1)]
        return _render(("d", "F_d"), rows, fmt)

    if cmd == "chern":
        coeffs = chern_total_tangent_quadric(args.dim).coeffs
        if fmt == "json":
            return json.dumps({"dim": args.dim, "coeffs": list(coeffs)}, indent=2) + "\n"
        return _render(("k", "c_k"), list(enumerate(coeffs)), fmt)

    if cmd == "circle":
        F = f_closed(args.d)
        rows = [
            [a, b, a >= 0 and b >= 0, a > 0 and b > 0]
            for a, b in circle_solutions(F)
        ]
        return _render(("a", "b", "effective", "positive"), rows, fmt)

    if cmd == "table":
        records = [
            eliminate(d, include_extra_rules=args.extra_rules)
            for d in range(1, args.max_d + 1)
        ]
        if fmt == "json":
            return json.dumps([r.to_dict() for r in records], indent=2) + "\n"
        return _render(TABLE_COLUMNS, [_table_row(r) for r in records], fmt)

    if cmd == "eliminate":
        rec = eliminate(args.d, include_extra_rules=args.extra_rules)
        if args.explain:
            steps = explain(rec)
            if fmt == "json":
                return json.dumps({"d": rec.d, "steps": steps}, indent=2) + "\n"
            return "\n".join(steps) + "\n"
        if fmt == "json":
            return json.dumps(rec.to_dict(), indent=2) + "\n"
        return _render(TABLE_COLUMNS, [_table_row(rec)], fmt)

    if cmd == "fine":
        rows = [[r["n"], r["F_n"], r["fine_n"]] for r in fine_comparison_report(args.n_max)]
        return _render(("n", "F_n", "fine_n"), rows, fmt)

    raise AssertionError(cmd)


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        # values such as (d+1)! for large d exceed the default digit cap
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        out = _run(args)
    except (InvariantViolation, CrossoverError) as exc:
        print(f"abelquad: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
