"""Geometric dissections of a trapezoid and their poofed triangulations.

A dissection lists rational points and counterclockwise triangles that
tile the quadrilateral ``p q r s`` exactly.  Unlike a combinatorial
triangulation, a dissection may have T-vertices: a vertex of one
triangle sitting in the interior of another triangle's edge, or on a
side of the quadrilateral.

Validation is exact: the corner frame must be a counterclockwise
trapezoid, triangles must be counterclockwise and nondegenerate, lie
inside the quadrilateral, have pairwise disjoint interiors (separating
axis test over edge normals, all in rational arithmetic), and their
doubled areas must sum to the doubled area of the quadrilateral.

``poof`` converts a valid dissection into a combinatorial triangulation
of the quadrilateral by inserting zero-area fan triangles along every
subdivided edge: one fan per triangle edge carrying other vertices in
its interior, and one fan per subdivided side of the quadrilateral.
The fans are degenerate by construction, so they contribute zero to
every area vector while making all edge incidences match up.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterator, Mapping, Sequence

from .areamap import Drawing, Point, doubled_area, make_point, trapezoid_ratio
from .exact import format_rational, parse_rational
from .triangulation import CORNERS, CombinatorialTriangulation, Triangle

__all__ = [
    "GeometricDissection",
    "InvalidDissectionError",
    "validate_dissection",
    "poof",
    "dissection_from_json",
    "dissection_to_json",
]


class InvalidDissectionError(ValueError):
    """Raised when a dissection fails validation; carries the problems."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


@dataclass(frozen=True)
class GeometricDissection:
    points: Mapping[str, Point]
    triangles: tuple[Triangle, ...]

    def point(self, vertex: str) -> Point:
        try:
            return self.points[vertex]
        except KeyError:
            raise KeyError(f"vertex {vertex!r} has no coordinates") from None

    def corner_points(self) -> tuple[Point, Point, Point, Point]:
        return tuple(self.point(c) for c in CORNERS)

    def triangle_points(self, triangle: Triangle) -> tuple[Point, Point, Point]:
        return tuple(self.point(v) for v in triangle.vertices)

    def validate(self) -> list[str]:
        return validate_dissection(self)

    def require_valid(self) -> "GeometricDissection":
        problems = self.validate()
        if problems:
            raise InvalidDissectionError(problems)
        return self


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def _projection_interval(points: Sequence[Point], axis: Point) -> tuple[Fraction, Fraction]:
    values = [axis[0] * x + axis[1] * y for x, y in points]
    return min(values), max(values)


def _interiors_disjoint(a: Sequence[Point], b: Sequence[Point]) -> bool:
    """Separating axis test for two triangles, exact over the rationals.

    Convex interiors are disjoint exactly when some edge normal of one
    triangle weakly separates the vertex projections, so touching along
    edges or vertices still counts as disjoint.
    """
    for tri in (a, b):
        for i in range(3):
            x1, y1 = tri[i]
            x2, y2 = tri[(i + 1) % 3]
            axis = (y2 - y1, x1 - x2)
            lo_a, hi_a = _projection_interval(a, axis)
            lo_b, hi_b = _projection_interval(b, axis)
            if hi_a <= lo_b or hi_b <= lo_a:
                return True
    return False


def validate_dissection(dissection: GeometricDissection) -> list[str]:
    problems: list[str] = []
    for corner in CORNERS:
        if corner not in dissection.points:
            problems.append(f"missing corner point {corner!r}")
    names = [t.name for t in dissection.triangles]
    if len(set(names)) != len(names):
        problems.append("duplicate triangle names")
    if not dissection.triangles:
        problems.append("no triangles")
    for t in dissection.triangles:
        if len(set(t.vertices)) != 3:
            problems.append(f"triangle {t.name} repeats a vertex")
        for v in t.vertices:
            if v not in dissection.points:
                problems.append(f"triangle {t.name} uses unknown vertex {v!r}")
    if problems:
        return problems

    coords = list(dissection.points.items())
    for (u, a), (v, b) in combinations(coords, 2):
        if a == b:
            problems.append(f"vertices {u!r} and {v!r} share the point ({format_rational(a[0])}, {format_rational(a[1])})")
    used = {v for t in dissection.triangles for v in t.vertices}
    for v in dissection.points:
        if v not in used:
            problems.append(f"vertex {v!r} belongs to no triangle")

    p, q, r, s = dissection.corner_points()
    try:
        ratio = trapezoid_ratio({"p": p, "q": q, "r": r, "s": s})
    except ValueError as exc:
        return problems + [str(exc)]
    if ratio <= 0:
        problems.append(f"trapezoid ratio {format_rational(ratio)} is not positive")
    if doubled_area(p, q, s) <= 0:
        problems.append("corner frame is not counterclockwise")
    if problems:
        return problems

    for t in dissection.triangles:
        area = doubled_area(*dissection.triangle_points(t))
        if area == 0:
            problems.append(f"triangle {t.name} is degenerate")
        elif area < 0:
            problems.append(f"triangle {t.name} is clockwise")
    if problems:
        return problems

    quad = (p, q, r, s)
    for t in dissection.triangles:
        for v in t.vertices:
            pt = dissection.point(v)
            for i in range(4):
                if doubled_area(quad[i], quad[(i + 1) % 4], pt) < 0:
                    problems.append(f"vertex {v!r} lies outside the quadrilateral")
                    break
            else:
                continue
            break

    for ta, tb in combinations(dissection.triangles, 2):
        if not _interiors_disjoint(
            dissection.triangle_points(ta), dissection.triangle_points(tb)
        ):
            problems.append(f"triangles {ta.name} and {tb.name} overlap")

    total = sum(
        (doubled_area(*dissection.triangle_points(t)) for t in dissection.triangles),
        Fraction(0),
    )
    quad_area = doubled_area(p, q, r) + doubled_area(p, r, s)
    if total != quad_area:
        problems.append(
            f"triangle areas sum to {format_rational(total)}, quadrilateral has {format_rational(quad_area)}"
        )
    return problems


# ---------------------------------------------------------------------------
# poofing
# ---------------------------------------------------------------------------


def _between(a: Point, b: Point, w: Point) -> bool:
    """True when ``w`` lies strictly inside the open segment from a to b."""
    if doubled_area(a, b, w) != 0:
        return False
    ab = (b[0] - a[0], b[1] - a[1])
    aw = (w[0] - a[0], w[1] - a[1])
    along = ab[0] * aw[0] + ab[1] * aw[1]
    length = ab[0] * ab[0] + ab[1] * ab[1]
    return 0 < along < length


def _vertices_on_segment(
    dissection: GeometricDissection, a: str, b: str
) -> list[str]:
    """Vertex ids strictly inside segment ``a b``, ordered from a to b."""
    pa, pb = dissection.point(a), dissection.point(b)
    ab = (pb[0] - pa[0], pb[1] - pa[1])
    found = []
    for v, pv in dissection.points.items():
        if v in (a, b):
            continue
        if _between(pa, pb, pv):
            along = ab[0] * (pv[0] - pa[0]) + ab[1] * (pv[1] - pa[1])
            found.append((along, v))
    return [v for _, v in sorted(found)]


def _fresh_fan_names(existing: set[str]) -> Iterator[str]:
    i = 1
    while True:
        name = f"P{i}"
        if name not in existing:
            yield name
        i += 1


def poof(dissection: GeometricDissection) -> tuple[CombinatorialTriangulation, Drawing]:
    """Fill every subdivided edge of a valid dissection with zero-area fans.

    Returns the resulting combinatorial triangulation (original
    triangles first, in input order, then fan triangles named ``P1,
    P2, ...``) together with the drawing that places it on the original
    points.  Fans come in two shapes:

    - for a triangle edge ``a -> b`` carrying interior vertices
      ``w1 .. wj``, the triangles ``(a, w1, w2), ..., (a, wj, b)``;
    - for a quadrilateral side ``c1 -> c2`` carrying interior vertices
      ``w1 .. wk``, the triangles ``(c1, c2, wk), (c1, wk, w(k-1)),
      ..., (c1, w2, w1)``, so the side itself becomes a single edge.
    """
    dissection.require_valid()
    triangles: list[Triangle] = list(dissection.triangles)
    fresh = _fresh_fan_names({t.name for t in dissection.triangles})

    for t in dissection.triangles:
        for a, b in t.directed_edges():
            inside = _vertices_on_segment(dissection, a, b)
            if not inside:
                continue
            path = [a, *inside, b]
            for i in range(1, len(path) - 1):
                triangles.append(Triangle(next(fresh), (a, path[i], path[i + 1])))

    for i in range(4):
        c1, c2 = CORNERS[i], CORNERS[(i + 1) % 4]
        inside = _vertices_on_segment(dissection, c1, c2)
        if not inside:
            continue
        chain = [c2, *reversed(inside)]
        for j in range(len(chain) - 1):
            triangles.append(Triangle(next(fresh), (c1, chain[j], chain[j + 1])))

    order = list(CORNERS) + [v for v in dissection.points if v not in CORNERS]
    tri = CombinatorialTriangulation(vertices=tuple(order), triangles=tuple(triangles))
    return tri, Drawing(tri, dict(dissection.points))


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def dissection_to_json(dissection: GeometricDissection) -> dict:
    return {
        "points": {
            v: [format_rational(x), format_rational(y)]
            for v, (x, y) in dissection.points.items()
        },
        "triangles": [
            {"name": t.name, "vertices": list(t.vertices)} for t in dissection.triangles
        ],
    }


def dissection_from_json(data: Mapping) -> GeometricDissection:
    """Build from a JSON object; triangle names default to ``B1, B2, ...``."""
    try:
        raw_points = data["points"]
        raw_triangles = list(data["triangles"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"dissection JSON needs 'points' and 'triangles': {exc}") from exc
    points = {}
    for v, xy in raw_points.items():
        if len(xy) != 2:
            raise ValueError(f"point {v!r} must have two coordinates")
        points[str(v)] = (parse_rational(str(xy[0])), parse_rational(str(xy[1])))
    triangles = []
    for i, entry in enumerate(raw_triangles):
        if isinstance(entry, Mapping):
            verts = tuple(str(v) for v in entry["vertices"])
            name = str(entry.get("name", f"B{i + 1}"))
        else:
            verts = tuple(str(v) for v in entry)
            name = f"B{i + 1}"
        if len(verts) != 3:
            raise ValueError(f"triangle {name} must have exactly three vertices")
        triangles.append(Triangle(name, verts))
    return GeometricDissection(points=points, triangles=tuple(triangles))


def load_dissection(path: str | Path) -> GeometricDissection:
    with open(path) as fh:
        return dissection_from_json(json.load(fh))


def save_dissection(dissection: GeometricDissection, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(dissection_to_json(dissection), fh, indent=2)
        fh.write("\n")
