"""Command-line interface: compute, construct, enumerate, extremal, verify."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .enumeration import counts_by_matching, enumerate_with_codes, extremal_search
from .families import parse_family_spec, recognize_family
from .graph import DisconnectedError, GraphParseError, read_graph, write_graph, wiener_index
from .rational import format_rational
from .resistance import (
    format_resistance_matrix,
    kirchhoff_index,
    resistance_matrix,
    vertex_sums,
)
from .verification import SUITE_NAMES, run_suite


def _default_threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    env = os.environ.get("UNIKIRCH_THREADS")
    if env and env.isdigit() and int(env) > 0:
        return int(env)
    return os.cpu_count() or 1


def _decimal(x) -> str:
    return f"{float(x):.6f}"


def _cmd_compute(args) -> int:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return 2
    try:
        g = read_graph(text)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        kf = kirchhoff_index(g)
    except DisconnectedError:
        print("error: input graph is disconnected", file=sys.stderr)
        return 1
    suffix = f" (~ {_decimal(kf)})" if args.decimal else ""
    print(f"Kf = {format_rational(kf)}{suffix}")
    if args.wiener:
        w = wiener_index(g)
        suffix = f" (~ {_decimal(w)})" if args.decimal else ""
        print(f"W = {format_rational(w)}{suffix}")
    if args.vertex_sums:
        for v, s in enumerate(vertex_sums(g)):
            suffix = f" (~ {_decimal(s)})" if args.decimal else ""
            print(f"Kf[{v}] = {format_rational(s)}{suffix}")
    if args.resistance_matrix:
        sys.stdout.write(format_resistance_matrix(resistance_matrix(g)))
    return 0


def _cmd_construct(args) -> int:
    try:
        spec = parse_family_spec(args.family)
        g = spec.build()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = write_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_enumerate(args) -> int:
    try:
        if args.count_only and not args.emit:
            if args.m is not None:
                count = sum(1 for _ in enumerate_with_codes(args.n, args.m))
                print(f"{args.n},{args.m},{count}")
            else:
                by_m = counts_by_matching(args.n)
                for m, c in by_m.items():
                    print(f"{args.n},{m},{c}")
                print(f"{args.n},*,{sum(by_m.values())}")
            return 0
        total = 0
        for code, g in enumerate_with_codes(args.n, args.m):
            total += 1
            if args.emit:
                out = Path(args.emit)
                out.mkdir(parents=True, exist_ok=True)
                (out / f"{code.stable_hash()}.graph").write_text(write_graph(g))
            else:
                print(code)
        if args.count_only:
            print(f"{args.n},{args.m if args.m is not None else '*'},{total}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def _cmd_extremal(args) -> int:
    try:
        codes, value = extremal_search(args.n, args.m, args.invariant)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    from .enumeration import graph_from_code

    for code in codes:
        fam = recognize_family(graph_from_code(code))
        label = fam.text() if fam is not None else str(code)
        suffix = f" (~ {_decimal(value)})" if args.decimal else ""
        print(f"{label}  {format_rational(value)}{suffix}")
    return 0


def _cmd_verify(args) -> int:
    try:
        reports = run_suite(
            args.suite,
            max_n=args.max_n,
            extended=args.extended,
            seed=args.seed,
            trials=args.trials,
            threads=_default_threads(args),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for report in reports:
        print(report.render_text())
    if args.json:
        if len(reports) == 1:
            payload = reports[0].to_json_dict()
        else:
            payload = {
                "suites": [r.to_json_dict() for r in reports],
                "summary": {
                    "pass": sum(r.passed for r in reports),
                    "fail": sum(r.failed for r in reports),
                    "skipped": sum(r.skipped for r in reports),
                },
            }
        Path(args.json).write_text(json.dumps(payload, indent=2) + "\n")
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unikirch",
        description=(
            "Exact resistance distances, Kirchhoff indices and matching "
            "numbers of unicyclic graphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact invariants of a graph file")
    p.add_argument("--input", required=True, help="graph file to read")
    p.add_argument("--resistance-matrix", action="store_true")
    p.add_argument("--vertex-sums", action="store_true")
    p.add_argument("--wiener", action="store_true")
    p.add_argument("--decimal", action="store_true", help="append decimal approximations")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("construct", help="build a named family graph")
    p.add_argument("--family", required=True, help='e.g. "C6", "U(8,2,0,0)", "Unm(14,4)"')
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("enumerate", help="enumerate unicyclic graphs up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="filter by matching number")
    p.add_argument("--count-only", action="store_true", help="print CSV rows n,m,count")
    p.add_argument("--emit", help="write one graph file per class into this directory")
    p.add_argument("--threads", type=int)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("extremal", help="exact argmin over an (n, m) class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--invariant", choices=("kirchhoff", "wiener"), default="kirchhoff")
    p.add_argument("--decimal", action="store_true")
    p.add_argument("--threads", type=int)
    p.set_defaults(fn=_cmd_extremal)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--extended", action="store_true", help="extended enumeration window")
    p.add_argument("--json", help="write the structured report to this file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--threads", type=int)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)
