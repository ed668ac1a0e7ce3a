"""Geometric dissections: validation and poofing into triangulations."""

from __future__ import annotations

from fractions import Fraction

import pytest

from areapoly.areamap import doubled_area, make_point
from areapoly.corpus import corpus_dissection, corpus_names
from areapoly.dissection import (
    GeometricDissection,
    InvalidDissectionError,
    dissection_from_json,
    dissection_to_json,
    poof,
)
from areapoly.triangulation import Triangle


def square_points(**extra) -> dict:
    points = {
        "p": make_point(0, 0),
        "q": make_point(1, 0),
        "r": make_point(1, 1),
        "s": make_point(0, 1),
    }
    points.update(extra)
    return points


def dissection(points, *triangles) -> GeometricDissection:
    return GeometricDissection(
        points=points,
        triangles=tuple(
            Triangle(f"B{i + 1}", tuple(v)) for i, v in enumerate(triangles)
        ),
    )


class TestValidation:
    @pytest.mark.parametrize("name", corpus_names())
    def test_corpus_is_valid(self, name):
        assert corpus_dissection(name).validate() == []

    def test_clockwise_triangle_rejected(self):
        d = dissection(square_points(), ("p", "r", "q"), ("p", "r", "s"))
        assert any("clockwise" in p for p in d.validate())

    def test_overlap_rejected(self):
        d = dissection(
            square_points(m=make_point(Fraction(1, 2), Fraction(1, 2))),
            ("p", "q", "r"),
            ("p", "r", "s"),
            ("p", "q", "m"),
        )
        assert d.validate()

    def test_gap_rejected(self):
        d = dissection(
            square_points(m=make_point(Fraction(1, 2), Fraction(1, 2))),
            ("p", "q", "m"),
            ("p", "m", "s"),
            ("m", "q", "r"),
        )
        assert any("area" in p for p in d.validate())

    def test_outside_vertex_rejected(self):
        d = dissection(
            square_points(far=make_point(5, 5)),
            ("p", "q", "far"),
            ("p", "far", "s"),
        )
        assert d.validate()

    def test_unused_vertex_rejected(self):
        d = dissection(
            square_points(ghost=make_point(Fraction(1, 3), Fraction(1, 3))),
            ("p", "q", "r"),
            ("p", "r", "s"),
        )
        assert any("ghost" in p for p in d.validate())

    def test_coincident_vertices_rejected(self):
        d = dissection(
            square_points(dup=make_point(0, 0)),
            ("p", "q", "r"),
            ("p", "r", "s"),
            ("p", "dup", "s"),
        )
        assert d.validate()

    def test_degenerate_triangle_rejected(self):
        points = square_points(m=make_point(Fraction(1, 2), Fraction(1, 2)))
        d = dissection(points, ("p", "m", "r"), ("p", "q", "r"), ("p", "r", "s"))
        assert d.validate()

    def test_require_valid_raises(self):
        d = dissection(square_points(), ("p", "r", "q"), ("p", "r", "s"))
        with pytest.raises(InvalidDissectionError):
            d.require_valid()


class TestPoof:
    def test_edge_to_edge_needs_no_fillers(self):
        tri, drawing = poof(corpus_dissection("diag2"))
        assert tri.validate() == []
        assert tri.triangle_names == ("B1", "B2")
        assert drawing.area_vector().total() == 2

    @pytest.mark.parametrize(
        "name, fillers",
        [("tvertex", 1), ("unequal3", 1), ("eighths", 4)],
    )
    def test_filler_counts(self, name, fillers):
        source = corpus_dissection(name)
        tri, drawing = poof(source)
        assert tri.validate() == []
        originals = {t.name for t in source.triangles}
        extras = [n for n in tri.triangle_names if n not in originals]
        assert len(extras) == fillers
        for extra in extras:
            assert drawing.triangle_area(extra) == 0

    @pytest.mark.parametrize("name", corpus_names())
    def test_areas_preserved(self, name):
        source = corpus_dissection(name)
        tri, drawing = poof(source)
        for t in source.triangles:
            assert drawing.triangle_area(t.name) == doubled_area(
                *source.triangle_points(t)
            )
        assert drawing.area_vector().total() == 2

    @pytest.mark.parametrize("name", corpus_names())
    def test_poofed_drawing_frame_is_honest(self, name):
        _, drawing = poof(corpus_dissection(name))
        assert drawing.validate() == []
        assert drawing.frame_area() == -1

    def test_rejects_invalid_input(self):
        bad = dissection(square_points(), ("p", "r", "q"), ("p", "r", "s"))
        with pytest.raises(InvalidDissectionError):
            poof(bad)


class TestJson:
    @pytest.mark.parametrize("name", corpus_names())
    def test_round_trip(self, name):
        source = corpus_dissection(name)
        again = dissection_from_json(dissection_to_json(source))
        assert again == source
