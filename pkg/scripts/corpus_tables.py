#!/usr/bin/env python3
"""Print the relation tables for the built-in triangulation corpus.

For every corpus triangulation this prints the trapezoid relation, the
parallelogram relation, the single-variable restriction profile, and the
doubling-substitution quotient, so the whole corpus can be eyeballed at
once.  Everything is recomputed from scratch; nothing here is cached.
"""

from __future__ import annotations

import argparse
import sys
import time

from areapoly.corpus import relation_corpus
from areapoly.poly import canonical_str
from areapoly.variety import (
    family_quotient,
    frame_power_profile,
    gauge_parameter_count,
    independence_rank,
    parallelogram_polynomial,
    trapezoid_polynomial,
)


def describe(name: str, tri) -> list[str]:
    started = time.perf_counter()
    z = trapezoid_polynomial(tri)
    p = parallelogram_polynomial(tri)
    elapsed = time.perf_counter() - started
    profile = frame_power_profile(z)
    quotient = family_quotient(z, p)
    lines = [
        f"== {name} ({len(tri.triangles)} triangles, "
        f"{gauge_parameter_count(tri)} gauge parameters, {elapsed:.2f}s)",
        f"  z = {canonical_str(z)}",
        f"  p = {canonical_str(p)}",
        f"  deg z = {z.total_degree()}, deg p = {p.total_degree()}",
        "  restriction profile: "
        + ", ".join(f"{v} -> U^{a}*(U+{v})^{b}" for v, (a, b) in profile.items()),
        f"  doubling quotient: {canonical_str(quotient)}",
        f"  jacobian rank of the area map: {independence_rank(tri)}",
    ]
    return lines


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "names",
        nargs="*",
        help="corpus entries to print (default: all)",
    )
    args = parser.parse_args(argv)
    corpus = relation_corpus()
    names = args.names or list(corpus)
    for name in names:
        if name not in corpus:
            parser.error(f"unknown corpus entry {name!r}; choose from {list(corpus)}")
        for line in describe(name, corpus[name]):
            print(line)
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
