#!/usr/bin/env python3
"""Walk the square-dissection corpus through the odd-equidissection argument.

For each built-in dissection of the unit square this prints the rainbow
certificate (the 2-adic coloring, the rainbow triangles, the boundary
pattern) and the counting bound that rules out equal areas for odd piece
counts.  The three equal-area dissections (2, 4, and 8 pieces) come out
admissible; the unequal ones show a triangle whose area has negative
2-adic valuation regardless.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from areapoly.areamap import doubled_area
from areapoly.coloring import equidissection_report
from areapoly.corpus import corpus_description, corpus_dissection, corpus_names
from areapoly.exact import val2


def describe(name: str) -> list[str]:
    dissection = corpus_dissection(name)
    report = equidissection_report(dissection)
    lines = [f"== {name}: {corpus_description(name)}"]
    lines.extend("  " + line for line in report.summary_lines())
    certificate = report.certificate
    lines.append(
        "  corner colors: "
        + ", ".join(
            f"{v}={c}" for v, c in zip(("p", "q", "r", "s"), certificate.corner_colors)
        )
    )
    worst = min(
        val2(doubled_area(*dissection.triangle_points(t)) / Fraction(2))
        for t in dissection.triangles
    )
    lines.append(f"  smallest val2(true area): {worst}")
    return lines


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "names",
        nargs="*",
        help="corpus dissections to report on (default: all)",
    )
    args = parser.parse_args(argv)
    known = corpus_names()
    names = args.names or known
    for name in names:
        if name not in known:
            parser.error(f"unknown dissection {name!r}; choose from {list(known)}")
        for line in describe(name):
            print(line)
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
