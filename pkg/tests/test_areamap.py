"""Drawings, area vectors, the symbolic gauge, and frame normalization."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from areapoly.areamap import (
    DegenerateFrameError,
    Drawing,
    doubled_area,
    drawing_from_gauge,
    drawing_from_json,
    drawing_to_json,
    gauged_areas,
    make_point,
    normalize_map,
    normalized_drawing,
    random_drawing,
    trapezoid_ratio,
)
from areapoly.corpus import relation_corpus
from areapoly.poly import Poly
from areapoly.triangulation import diagonal_family, make_triangulation

UNIT_SQUARE = {
    "p": make_point(0, 0),
    "q": make_point(1, 0),
    "r": make_point(1, 1),
    "s": make_point(0, 1),
}


def minimal_drawing() -> Drawing:
    tri = make_triangulation(
        vertices=("p", "q", "r", "s"),
        triangles=[("p", "q", "r"), ("p", "r", "s")],
    )
    return Drawing(tri, dict(UNIT_SQUARE))


class TestGeometry:
    def test_doubled_area_orientation(self):
        a, b, c = make_point(0, 0), make_point(1, 0), make_point(0, 1)
        assert doubled_area(a, b, c) == 1
        assert doubled_area(a, c, b) == -1
        assert doubled_area(a, b, make_point(2, 0)) == 0

    def test_trapezoid_ratio_square(self):
        assert trapezoid_ratio(UNIT_SQUARE) == 1

    def test_trapezoid_ratio_general(self):
        points = dict(UNIT_SQUARE)
        points["r"] = make_point(Fraction(5, 2), 1)
        assert trapezoid_ratio(points) == Fraction(5, 2)

    def test_trapezoid_ratio_rejects_skew_top(self):
        points = dict(UNIT_SQUARE)
        points["r"] = make_point(1, 2)
        with pytest.raises(ValueError):
            trapezoid_ratio(points)


class TestDrawing:
    def test_frame_areas(self):
        drawing = minimal_drawing()
        assert drawing.frame_area() == -1
        assert drawing.opposite_frame_area() == -1
        assert drawing.frame_area() + drawing.opposite_frame_area() == -(
            drawing.area_vector().total()
        )

    def test_area_vector(self):
        vector = minimal_drawing().area_vector()
        assert vector.names == ("B1", "B2")
        assert vector.values == (Fraction(1), Fraction(1))
        assert vector.total() == 2

    def test_validate_flags_bad_ratio(self):
        tri = minimal_drawing().triangulation
        points = dict(UNIT_SQUARE)
        points["r"] = make_point(-1, 1)
        assert Drawing(tri, points).validate()

    def test_gauge_drawing(self):
        drawing = drawing_from_gauge(diagonal_family(0), lam=2, t=3, interior={})
        assert drawing.point("r") == (Fraction(3), Fraction(2))
        assert drawing.frame_area() == -2

    def test_json_round_trip(self):
        drawing = minimal_drawing()
        assert drawing_from_json(drawing_to_json(drawing)) == drawing


class TestGauge:
    @pytest.mark.parametrize("key", sorted(relation_corpus()))
    def test_identities(self, key):
        gauge = gauged_areas(relation_corpus()[key])
        lam = Poly.variable(gauge.ring, "lam")
        ratio = Poly.variable(gauge.ring, "t")
        total = gauge.total()
        assert total == lam * (Poly.one(gauge.ring) + ratio)
        assert gauge.frame + gauge.opposite_frame == -total
        assert gauge.frame == -lam

    @pytest.mark.parametrize("key", sorted(relation_corpus()))
    def test_vertical_weight_homogeneity(self, key):
        gauge = gauged_areas(relation_corpus()[key])
        weights = {"lam": 1}
        for name in gauge.ring.names:
            if name.startswith("y_"):
                weights[name] = 1
        for poly in (gauge.frame, gauge.opposite_frame, *gauge.areas.values()):
            assert poly.weighted_degree(weights) == 1
            assert poly.total_degree() <= 2


class TestNormalization:
    def test_map_sends_frame_to_unit(self):
        p, q, s = make_point(1, 1), make_point(3, 2), make_point(2, 4)
        mapper = normalize_map(p, q, s)
        assert mapper.apply(p) == (0, 0)
        assert mapper.apply(q) == (1, 0)
        assert mapper.apply(s) == (0, 1)
        assert mapper.det == Fraction(1, doubled_area(p, q, s))

    def test_collinear_frame_rejected(self):
        with pytest.raises(DegenerateFrameError):
            normalize_map(make_point(0, 0), make_point(1, 1), make_point(2, 2))

    def test_fourth_corner_lands_on_ratio(self):
        rng = random.Random(3)
        tri = diagonal_family(1)
        for _ in range(20):
            drawing = random_drawing(tri, rng)
            ratio = trapezoid_ratio({c: drawing.point(c) for c in "pqrs"})
            normalized = normalized_drawing(drawing)
            assert normalized.point("r") == (ratio, Fraction(1))

    def test_areas_rescale_by_determinant(self):
        rng = random.Random(4)
        tri = diagonal_family(1)
        drawing = random_drawing(tri, rng)
        mapper = normalize_map(*(drawing.point(c) for c in "pqs"))
        normalized = normalized_drawing(drawing)
        for name in tri.triangle_names:
            assert normalized.triangle_area(name) == (
                mapper.det * drawing.triangle_area(name)
            )


class TestRandomDrawings:
    def test_seeded_reproducibility(self):
        tri = diagonal_family(2)
        one = random_drawing(tri, random.Random(11))
        two = random_drawing(tri, random.Random(11))
        assert one == two

    def test_parallelogram_mode(self):
        tri = diagonal_family(1)
        rng = random.Random(5)
        for _ in range(20):
            drawing = random_drawing(tri, rng, parallelogram=True)
            p, q = drawing.point("p"), drawing.point("q")
            r, s = drawing.point("r"), drawing.point("s")
            assert (r[0] - s[0], r[1] - s[1]) == (q[0] - p[0], q[1] - p[1])

    def test_positive_ratio_mode_validates(self):
        tri = diagonal_family(1)
        rng = random.Random(6)
        for _ in range(30):
            drawing = random_drawing(tri, rng, positive_ratio=True)
            assert drawing.validate() == []

    def test_frame_never_degenerate(self):
        tri = diagonal_family(0)
        rng = random.Random(7)
        for _ in range(50):
            assert random_drawing(tri, rng).frame_area() != 0
