"""Drawings of a triangulation and the exact area data they induce.

A drawing assigns rational coordinates to every vertex of a
combinatorial triangulation, with the corners forming a trapezoid:
``r - s`` must be a positive rational multiple of ``q - p``.  From a
drawing we read off the area vector (the doubled signed area of each
triangle) and the frame area ``doubled_area(p, s, q)``, which is the
negative of the doubled quadrilateral base triangle and stays negative
for counterclockwise frames.

The symbolic counterpart pins the frame to ``p=(0,0)``, ``q=(1,0)``,
``s=(0,L)``, ``r=(t,L)`` and leaves interior vertices free, producing
one area polynomial per triangle in the gauge variables.  Every such
polynomial is homogeneous of degree one when the vertical coordinates
and ``L`` carry weight one, which is what makes the eliminated area
relation homogeneous.

``normalize_map`` gives the exact affine map carrying an arbitrary
nondegenerate frame onto the unit frame ``p=(0,0), q=(1,0), s=(0,1)``;
areas rescale by its determinant, and the fourth corner lands at
``(t', 1)`` where ``t'`` is the trapezoid ratio.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping

from .exact import format_rational, parse_rational
from .poly import Poly, Ring
from .triangulation import (
    CORNERS,
    CombinatorialTriangulation,
    triangulation_from_json,
    triangulation_to_json,
)

__all__ = [
    "Point",
    "make_point",
    "doubled_area",
    "DegenerateFrameError",
    "trapezoid_ratio",
    "Drawing",
    "AreaVector",
    "GaugedAreas",
    "gauged_areas",
    "AffineMap",
    "normalize_map",
    "normalized_drawing",
    "random_drawing",
    "drawing_from_gauge",
]

Point = tuple[Fraction, Fraction]


class DegenerateFrameError(ValueError):
    """The corner frame is degenerate: ``p``, ``q``, ``s`` are collinear."""


def make_point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def _sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def _cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def doubled_area(a: Point, b: Point, c: Point) -> Fraction:
    """Doubled signed area of a triangle, positive for counterclockwise."""
    return _cross(_sub(b, a), _sub(c, a))


def trapezoid_ratio(points: Mapping[str, Point]) -> Fraction:
    """The scalar ``t`` with ``r - s == t * (q - p)``.

    Raises ``ValueError`` when the top and bottom sides are not parallel
    or the bottom side collapses; the ratio itself may be any rational,
    including zero for a frame whose top side collapses.
    """
    base = _sub(points["q"], points["p"])
    top = _sub(points["r"], points["s"])
    if base == (0, 0):
        raise ValueError("side from p to q has zero length")
    if _cross(base, top) != 0:
        raise ValueError("side from s to r is not parallel to the side from p to q")
    if base[0]:
        return top[0] / base[0]
    return top[1] / base[1]


# ---------------------------------------------------------------------------
# numeric drawings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AreaVector:
    """Doubled signed triangle areas, aligned with the triangulation order."""

    names: tuple[str, ...]
    values: tuple[Fraction, ...]

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.names, self.values))

    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


@dataclass(frozen=True)
class Drawing:
    triangulation: CombinatorialTriangulation
    points: Mapping[str, Point]

    def point(self, vertex: str) -> Point:
        try:
            return self.points[vertex]
        except KeyError:
            raise KeyError(f"vertex {vertex!r} has no coordinates") from None

    def validate(self) -> list[str]:
        """Frame problems; interior vertices may sit anywhere."""
        problems = []
        for v in self.triangulation.vertices:
            if v not in self.points:
                problems.append(f"vertex {v!r} has no coordinates")
        if problems:
            return problems
        corners = {c: self.point(c) for c in CORNERS}
        try:
            t = trapezoid_ratio(corners)
        except ValueError as exc:
            return problems + [str(exc)]
        if t <= 0:
            problems.append(f"trapezoid ratio {format_rational(t)} is not positive")
        if doubled_area(corners["p"], corners["q"], corners["s"]) <= 0:
            problems.append("corner frame is not counterclockwise")
        return problems

    def frame_area(self) -> Fraction:
        """Doubled area of the corner triangle ``(p, s, q)``; negative when
        the frame is counterclockwise."""
        return doubled_area(self.point("p"), self.point("s"), self.point("q"))

    def opposite_frame_area(self) -> Fraction:
        """Doubled area of the complementary corner triangle ``(q, s, r)``.

        Together the two frame triangles cover the quadrilateral with
        reversed orientation, so this value plus :meth:`frame_area`
        equals minus the total doubled area of the triangulation.
        """
        return doubled_area(self.point("q"), self.point("s"), self.point("r"))

    def triangle_area(self, name: str) -> Fraction:
        t = self.triangulation.triangle(name)
        a, b, c = (self.point(v) for v in t.vertices)
        return doubled_area(a, b, c)

    def area_vector(self) -> AreaVector:
        names = self.triangulation.triangle_names
        return AreaVector(names, tuple(self.triangle_area(n) for n in names))


def drawing_from_gauge(
    tri: CombinatorialTriangulation,
    lam: Fraction | int,
    t: Fraction | int,
    interior: Mapping[str, Point],
) -> Drawing:
    """Drawing with the frame pinned to the standard gauge."""
    lam = Fraction(lam)
    t = Fraction(t)
    points: dict[str, Point] = {
        "p": make_point(0, 0),
        "q": make_point(1, 0),
        "s": (Fraction(0), lam),
        "r": (t, lam),
    }
    for v in tri.interior_vertices():
        points[v] = interior[v]
    return Drawing(tri, points)


# ---------------------------------------------------------------------------
# symbolic gauge areas
# ---------------------------------------------------------------------------

_PolyPoint = tuple[Poly, Poly]


def _poly_doubled_area(a: _PolyPoint, b: _PolyPoint, c: _PolyPoint) -> Poly:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


@dataclass(frozen=True)
class GaugedAreas:
    """Symbolic area data of a triangulation in the pinned frame."""

    triangulation: CombinatorialTriangulation
    ring: Ring
    frame: Poly
    opposite_frame: Poly
    areas: dict[str, Poly]

    def total(self) -> Poly:
        out = Poly.zero(self.ring)
        for poly in self.areas.values():
            out = out + poly
        return out


def interior_coordinate_names(tri: CombinatorialTriangulation) -> list[str]:
    names = []
    for v in tri.interior_vertices():
        names.extend([f"x_{v}", f"y_{v}"])
    return names


def gauged_areas(tri: CombinatorialTriangulation) -> GaugedAreas:
    """Area polynomials in the gauge ring ``(t, lam, x_*, y_*)``.

    The frame polynomial is ``-lam`` and the triangle polynomials sum to
    ``lam * (1 + t)``, the doubled trapezoid area.
    """
    ring = Ring(("t", "lam", *interior_coordinate_names(tri)))
    zero = Poly.zero(ring)
    one = Poly.one(ring)
    t = Poly.variable(ring, "t")
    lam = Poly.variable(ring, "lam")
    coords: dict[str, _PolyPoint] = {
        "p": (zero, zero),
        "q": (one, zero),
        "s": (zero, lam),
        "r": (t, lam),
    }
    for v in tri.interior_vertices():
        coords[v] = (Poly.variable(ring, f"x_{v}"), Poly.variable(ring, f"y_{v}"))
    areas = {}
    for triangle in tri.triangles:
        a, b, c = (coords[v] for v in triangle.vertices)
        areas[triangle.name] = _poly_doubled_area(a, b, c)
    frame = _poly_doubled_area(coords["p"], coords["s"], coords["q"])
    opposite = _poly_doubled_area(coords["q"], coords["s"], coords["r"])
    return GaugedAreas(tri, ring, frame, opposite, areas)


# ---------------------------------------------------------------------------
# frame normalization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineMap:
    """Exact affine plane map ``(x, y) -> (xx*x + xy*y + x0, yx*x + yy*y + y0)``."""

    xx: Fraction
    xy: Fraction
    x0: Fraction
    yx: Fraction
    yy: Fraction
    y0: Fraction

    def apply(self, pt: Point) -> Point:
        x, y = pt
        return (self.xx * x + self.xy * y + self.x0, self.yx * x + self.yy * y + self.y0)

    @property
    def det(self) -> Fraction:
        return self.xx * self.yy - self.xy * self.yx


def normalize_map(p: Point, q: Point, s: Point) -> AffineMap:
    """The affine map sending ``p`` to (0,0), ``q`` to (1,0), ``s`` to (0,1).

    Its determinant is the reciprocal of ``doubled_area(p, q, s)``; a
    collinear frame raises :class:`DegenerateFrameError`.
    """
    a, c = _sub(q, p)
    b, d = _sub(s, p)
    det = a * d - b * c
    if det == 0:
        raise DegenerateFrameError("corners p, q, s are collinear")
    xx, xy = d / det, -b / det
    yx, yy = -c / det, a / det
    return AffineMap(
        xx=xx,
        xy=xy,
        x0=-(xx * p[0] + xy * p[1]),
        yx=yx,
        yy=yy,
        y0=-(yx * p[0] + yy * p[1]),
    )


def normalized_drawing(drawing: Drawing) -> Drawing:
    """Apply the frame normalization to every vertex of a drawing."""
    m = normalize_map(drawing.point("p"), drawing.point("q"), drawing.point("s"))
    points = {v: m.apply(pt) for v, pt in drawing.points.items()}
    return Drawing(drawing.triangulation, points)


# ---------------------------------------------------------------------------
# random drawings
# ---------------------------------------------------------------------------

_DENOMINATORS = (1, 2, 3, 4, 5, 8)


def _random_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-9, 9), rng.choice(_DENOMINATORS))
        if value or not nonzero:
            return value


def _random_point(rng: random.Random) -> Point:
    return (_random_rational(rng), _random_rational(rng))


def random_drawing(
    tri: CombinatorialTriangulation,
    rng: random.Random,
    parallelogram: bool = False,
    positive_ratio: bool = False,
) -> Drawing:
    """A random rational drawing with a nondegenerate frame.

    Corners ``p``, ``q``, ``s`` are drawn freely and redrawn while they
    are collinear; ``r`` is placed as ``s + t*(q - p)`` for a random
    nonzero ratio ``t`` (forced to one in parallelogram mode).  Interior
    vertices are unconstrained, so the triangles of the drawing may
    overlap; only the exact area vector matters here.

    With ``positive_ratio`` the frame is additionally redrawn until it
    is counterclockwise with ``t > 0``, which makes the corners a
    genuine trapezoid and the drawing pass :meth:`Drawing.validate`.
    """
    while True:
        p = _random_point(rng)
        q = _random_point(rng)
        s = _random_point(rng)
        orientation = doubled_area(p, q, s)
        if orientation == 0 or (positive_ratio and orientation < 0):
            continue
        t = Fraction(1) if parallelogram else _random_rational(rng, nonzero=True)
        if positive_ratio and t < 0:
            t = -t
        r = (s[0] + t * (q[0] - p[0]), s[1] + t * (q[1] - p[1]))
        points: dict[str, Point] = {"p": p, "q": q, "r": r, "s": s}
        for v in tri.interior_vertices():
            points[v] = _random_point(rng)
        return Drawing(tri, points)


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def drawing_to_json(drawing: Drawing) -> dict:
    return {
        "triangulation": triangulation_to_json(drawing.triangulation),
        "points": {
            v: [format_rational(x), format_rational(y)]
            for v, (x, y) in drawing.points.items()
        },
    }


def drawing_from_json(data: Mapping) -> Drawing:
    tri = triangulation_from_json(data["triangulation"])
    points = {}
    for v, xy in data["points"].items():
        if len(xy) != 2:
            raise ValueError(f"point {v!r} must have two coordinates")
        points[str(v)] = (parse_rational(str(xy[0])), parse_rational(str(xy[1])))
    return Drawing(tri, points)


def load_drawing(path: str | Path) -> Drawing:
    with open(path) as fh:
        return drawing_from_json(json.load(fh))


def save_drawing(drawing: Drawing, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(drawing_to_json(drawing), fh, indent=2)
        fh.write("\n")
