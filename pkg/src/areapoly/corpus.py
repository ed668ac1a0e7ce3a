"""Worked example dissections and triangulations used across the suite.

Five small dissections of the unit square exercise every feature:

- ``diag2``: two triangles across the main diagonal;
- ``fan4``: four triangles sharing the center point;
- ``eighths``: eight equal triangles through the center and the side
  midpoints (poofs to twelve with one boundary fan per side);
- ``unequal3``: three triangles of unequal area with a T-vertex on the
  top side;
- ``tvertex``: three triangles with an interior T-vertex on a diagonal.

``reference_square`` parks them all on the unit square so colorings and
equidissection reports have concrete coordinates to chew on.

The module also freezes the presentation of the one-step diagonal
family whose relation appears in the package documentation: listing its
four triangles in the order below under default names produces the
relation :data:`PRINTED_RELATION` verbatim, and
:data:`PRINTED_NAME_MAP` translates those default names back to the
structural staircase names.
"""

from __future__ import annotations

from fractions import Fraction

from .areamap import make_point
from .dissection import GeometricDissection
from .triangulation import (
    CombinatorialTriangulation,
    Triangle,
    barycentric_refine,
    center_fan,
    diagonal_family,
    make_triangulation,
)

__all__ = [
    "PRINTED_RELATION",
    "PRINTED_NAME_MAP",
    "printed_order_step",
    "relation_corpus",
    "corpus_names",
    "corpus_dissection",
    "corpus_description",
]

PRINTED_RELATION = "U^2 + 2*U*B1 + U*B2 + U*B4 + B1^2 + B1*B2 + B1*B3 + B1*B4"

PRINTED_NAME_MAP = {"B1": "B1", "B2": "A1", "B3": "A2", "B4": "B2"}


def printed_order_step() -> CombinatorialTriangulation:
    """The one-step diagonal family, triangles listed in printed order.

    Under default names ``B1 .. B4`` this ordering makes the trapezoid
    relation print exactly as :data:`PRINTED_RELATION`; structurally the
    four triangles are ``B1, A1, A2, B2`` of the staircase family, as
    recorded in :data:`PRINTED_NAME_MAP`.
    """
    return make_triangulation(
        vertices=("p", "q", "r", "s", "p1"),
        triangles=[
            ("q", "p1", "p"),
            ("s", "p", "p1"),
            ("s", "p1", "r"),
            ("q", "r", "p1"),
        ],
    )


def relation_corpus() -> dict[str, CombinatorialTriangulation]:
    """The benchmark triangulations whose relations the suite pins down.

    Three steps of the diagonal staircase family, the center fan, and
    the one-step staircase with one triangle refined barycentrically.
    """
    refined = barycentric_refine(diagonal_family(1), "A1")
    return {
        "diagonal-0": diagonal_family(0),
        "diagonal-1": diagonal_family(1),
        "diagonal-2": diagonal_family(2),
        "center-fan": center_fan(),
        "refined-diagonal-1": refined,
    }


def _unit_square_points() -> dict:
    return {
        "p": make_point(0, 0),
        "q": make_point(1, 0),
        "r": make_point(1, 1),
        "s": make_point(0, 1),
    }


def _diag2() -> GeometricDissection:
    return GeometricDissection(
        points=_unit_square_points(),
        triangles=(
            Triangle("B1", ("p", "q", "r")),
            Triangle("B2", ("p", "r", "s")),
        ),
    )


def _fan4() -> GeometricDissection:
    points = _unit_square_points()
    points["c"] = make_point(Fraction(1, 2), Fraction(1, 2))
    return GeometricDissection(
        points=points,
        triangles=(
            Triangle("B1", ("p", "q", "c")),
            Triangle("B2", ("q", "r", "c")),
            Triangle("B3", ("r", "s", "c")),
            Triangle("B4", ("s", "p", "c")),
        ),
    )


def _eighths() -> GeometricDissection:
    half = Fraction(1, 2)
    points = _unit_square_points()
    points.update(
        {
            "c": make_point(half, half),
            "mpq": make_point(half, 0),
            "mqr": make_point(1, half),
            "mrs": make_point(half, 1),
            "msp": make_point(0, half),
        }
    )
    ring = ["p", "mpq", "q", "mqr", "r", "mrs", "s", "msp"]
    triangles = tuple(
        Triangle(f"B{i + 1}", (ring[i], ring[(i + 1) % 8], "c")) for i in range(8)
    )
    return GeometricDissection(points=points, triangles=triangles)


def _unequal3() -> GeometricDissection:
    points = _unit_square_points()
    points["m"] = make_point(Fraction(1, 2), 1)
    return GeometricDissection(
        points=points,
        triangles=(
            Triangle("B1", ("p", "q", "r")),
            Triangle("B2", ("p", "r", "m")),
            Triangle("B3", ("p", "m", "s")),
        ),
    )


def _tvertex() -> GeometricDissection:
    points = _unit_square_points()
    points["m"] = make_point(Fraction(1, 2), Fraction(1, 2))
    return GeometricDissection(
        points=points,
        triangles=(
            Triangle("B1", ("p", "q", "m")),
            Triangle("B2", ("m", "q", "r")),
            Triangle("B3", ("p", "r", "s")),
        ),
    )


_BUILDERS = {
    "diag2": _diag2,
    "fan4": _fan4,
    "eighths": _eighths,
    "unequal3": _unequal3,
    "tvertex": _tvertex,
}

_DESCRIPTIONS = {
    "diag2": "two triangles across the main diagonal",
    "fan4": "four triangles fanned around the center",
    "eighths": "eight equal triangles through center and side midpoints",
    "unequal3": "three unequal triangles with a T-vertex on the top side",
    "tvertex": "three triangles with an interior T-vertex",
}


def corpus_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def corpus_dissection(name: str) -> GeometricDissection:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(
            f"unknown corpus entry {name!r}; available: {', '.join(_BUILDERS)}"
        ) from None


def corpus_description(name: str) -> str:
    return _DESCRIPTIONS[name]
