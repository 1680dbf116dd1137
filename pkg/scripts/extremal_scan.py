#!/usr/bin/env python3
"""Scan the exact Kirchhoff minima over every (n, m) cell and print CSV.

Each row lists the cell, the class size, the minimum, and the minimizer
set (named via family recognition where possible).

Usage:
    python scripts/extremal_scan.py [--max-n 12] [--invariant kirchhoff]
"""

import argparse
import sys

from unikirch.enumeration import enumerate_with_codes, graph_from_code
from unikirch.families import recognize_family
from unikirch.graph import wiener_index
from unikirch.matching import matching_number
from unikirch.rational import format_rational
from unikirch.resistance import kirchhoff_index


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--invariant", choices=("kirchhoff", "wiener"), default="kirchhoff")
    args = ap.parse_args()
    fn = kirchhoff_index if args.invariant == "kirchhoff" else wiener_index

    print("n,m,classes,minimum,minimizers")
    for n in range(3, args.max_n + 1):
        cells: dict[int, dict] = {}
        for code, g in enumerate_with_codes(n):
            m = matching_number(g).size
            cell = cells.setdefault(m, {"count": 0, "best": None, "argmin": []})
            cell["count"] += 1
            val = fn(g)
            if cell["best"] is None or val < cell["best"]:
                cell["best"], cell["argmin"] = val, [code]
            elif val == cell["best"]:
                cell["argmin"].append(code)
        for m in sorted(cells):
            cell = cells[m]
            names = []
            for code in cell["argmin"]:
                fam = recognize_family(graph_from_code(code))
                names.append(fam.text() if fam is not None else str(code))
            print(
                f"{n},{m},{cell['count']},{format_rational(cell['best'])},"
                f"{'|'.join(sorted(names))}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
