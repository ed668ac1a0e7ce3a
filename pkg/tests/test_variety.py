"""Area relations: elimination route, oracle route, and shape theorems."""

from __future__ import annotations

from fractions import Fraction

import pytest

from areapoly.corpus import PRINTED_RELATION
from areapoly.poly import Poly, Ring, canonical_str, parse_polynomial
from areapoly.triangulation import diagonal_family
from areapoly.variety import (
    FRAME_VARIABLE,
    RelationShapeError,
    areas_algebraically_independent,
    diagonal_relation_formula,
    doubling_substitution,
    family_quotient,
    frame_power_profile,
    gauge_parameter_count,
    independence_rank,
    interpolated_relation,
    is_frame_monic,
    is_monic_in_every_variable,
    monomials_of_degree,
    parallelogram_polynomial,
    rational_nullspace,
    relation_ring,
    trapezoid_polynomial,
    verify_parallelogram_frame_vanishing,
    verify_vanishing,
)

FROZEN_TRAPEZOID = {
    "diagonal-0": "U + B1",
    "diagonal-1": "U^2 + U*A1 + 2*U*B1 + U*B2 + A1*B1 + A2*B1 + B1^2 + B1*B2",
    "center-fan": PRINTED_RELATION,
    "refined-diagonal-1": (
        "U^2 + U*A1a + U*A1b + U*A1c + 2*U*B1 + U*B2 "
        "+ A1a*B1 + A1b*B1 + A1c*B1 + A2*B1 + B1^2 + B1*B2"
    ),
}

FROZEN_PARALLELOGRAM = {
    "diagonal-0": "A1 - B1",
    "diagonal-1": "A1 - A2 - B1 + B2",
    "diagonal-2": (
        "A1^2 - 2*A1*A3 + 2*A1*B2 - A2^2 - 2*A2*B1 - 2*A2*B3 "
        "+ A3^2 + 2*A3*B2 - B1^2 + 2*B1*B3 + B2^2 - B3^2"
    ),
    "center-fan": "B1 - B2 + B3 - B4",
    "refined-diagonal-1": "A1a + A1b + A1c - A2 - B1 + B2",
}

FROZEN_PROFILES = {
    "diagonal-1": {"A1": (1, 1), "A2": (2, 0), "B1": (0, 2), "B2": (1, 1)},
    "diagonal-2": {
        "A1": (1, 2),
        "A2": (2, 1),
        "A3": (3, 0),
        "B1": (0, 3),
        "B2": (1, 2),
        "B3": (2, 1),
    },
    "center-fan": {"B1": (0, 2), "B2": (1, 1), "B3": (2, 0), "B4": (1, 1)},
}


class TestEliminationRoute:
    @pytest.mark.parametrize("key", sorted(FROZEN_TRAPEZOID))
    def test_frozen_trapezoid_relations(self, key, trapezoid_relations):
        assert canonical_str(trapezoid_relations[key]) == FROZEN_TRAPEZOID[key]

    @pytest.mark.parametrize("key", sorted(FROZEN_PARALLELOGRAM))
    def test_frozen_parallelogram_relations(self, key, parallelogram_relations):
        assert canonical_str(parallelogram_relations[key]) == FROZEN_PARALLELOGRAM[key]

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_matches_closed_formula(self, n, trapezoid_relations):
        relation = trapezoid_relations[f"diagonal-{n}"]
        assert relation == diagonal_relation_formula(n)
        assert relation.total_degree() == n + 1

    def test_two_step_size(self, trapezoid_relations):
        assert len(trapezoid_relations["diagonal-2"].terms) == 38

    @pytest.mark.parametrize("key", sorted(FROZEN_TRAPEZOID))
    def test_homogeneous(self, key, trapezoid_relations):
        trapezoid_relations[key].homogeneous_degree()

    def test_refinement_splits_one_variable(self, trapezoid_relations):
        ring = trapezoid_relations["refined-diagonal-1"].ring
        split = sum(
            Poly.variable(ring, n) for n in ("A1a", "A1b", "A1c")
        )
        images = {
            "U": Poly.variable(ring, "U"),
            "A1": split,
            "A2": Poly.variable(ring, "A2"),
            "B1": Poly.variable(ring, "B1"),
            "B2": Poly.variable(ring, "B2"),
        }
        rebuilt = trapezoid_relations["diagonal-1"].substitute(images, ring=ring)
        assert rebuilt == trapezoid_relations["refined-diagonal-1"]

    def test_relation_ring_order(self):
        ring = relation_ring(diagonal_family(1))
        assert ring.names == ("U", "A1", "A2", "B1", "B2")

    @pytest.mark.parametrize(
        "key, count",
        [
            ("diagonal-0", 2),
            ("diagonal-1", 4),
            ("diagonal-2", 6),
            ("center-fan", 4),
            ("refined-diagonal-1", 6),
        ],
    )
    def test_gauge_parameter_count(self, key, count, corpus):
        assert gauge_parameter_count(corpus[key]) == count


class TestShapeTheorems:
    @pytest.mark.parametrize("key", sorted(FROZEN_TRAPEZOID))
    def test_frame_monic(self, key, trapezoid_relations):
        assert is_frame_monic(trapezoid_relations[key])

    def test_monic_in_every_variable(self, parallelogram_relations):
        for relation in parallelogram_relations.values():
            assert is_monic_in_every_variable(relation)

    def test_monic_in_every_variable_negative(self, trapezoid_relations):
        # The one-step trapezoid relation has no pure A2^2 term.
        assert not is_monic_in_every_variable(trapezoid_relations["diagonal-1"])

    @pytest.mark.parametrize("key", sorted(FROZEN_PROFILES))
    def test_restriction_profiles(self, key, trapezoid_relations):
        assert frame_power_profile(trapezoid_relations[key]) == FROZEN_PROFILES[key]

    def test_profile_rejects_other_shapes(self):
        ring = Ring(("U", "B1"))
        with pytest.raises(RelationShapeError):
            frame_power_profile(parse_polynomial("U^2 + U*B1 + 2*B1^2", ring))

    def test_doubling_substitution_smallest_case(self, trapezoid_relations):
        doubled = doubling_substitution(trapezoid_relations["diagonal-0"])
        assert canonical_str(doubled) == "-A1 + B1"

    @pytest.mark.parametrize("key", sorted(FROZEN_TRAPEZOID) + ["diagonal-2"])
    def test_family_quotients(
        self, key, trapezoid_relations, parallelogram_relations
    ):
        quotient = family_quotient(
            trapezoid_relations[key], parallelogram_relations[key]
        )
        if key == "diagonal-0":
            assert canonical_str(quotient) == "-1"
            return
        total = Poly.zero(quotient.ring)
        for name in quotient.ring.names:
            total = total + Poly.variable(quotient.ring, name)
        assert quotient in (total, -total)


class TestSampling:
    @pytest.mark.parametrize(
        "key, count",
        [("diagonal-0", 2), ("diagonal-1", 4), ("center-fan", 4)],
    )
    def test_jacobian_rank_is_full(self, key, count, corpus):
        assert independence_rank(corpus[key]) == count

    def test_jacobian_rank_drops_in_parallelogram_mode(self, corpus):
        assert independence_rank(corpus["diagonal-1"], parallelogram=True) == 3

    @pytest.mark.parametrize("key", ["diagonal-0", "diagonal-1", "center-fan"])
    def test_areas_independent_without_frame(self, key, corpus):
        assert areas_algebraically_independent(corpus[key])

    @pytest.mark.parametrize("key", ["diagonal-0", "diagonal-1"])
    def test_oracle_matches_elimination(self, key, corpus, trapezoid_relations):
        sampled = interpolated_relation(corpus[key], seed=0)
        expected = trapezoid_relations[key]
        assert sampled in (expected, -expected)

    @pytest.mark.parametrize("key", ["diagonal-1", "center-fan"])
    def test_oracle_parallelogram_mode(self, key, corpus, parallelogram_relations):
        sampled = interpolated_relation(corpus[key], seed=1, parallelogram=True)
        expected = parallelogram_relations[key]
        assert sampled in (expected, -expected)

    def test_vanishing_corpus(self, corpus, trapezoid_relations):
        checked = verify_vanishing(
            trapezoid_relations["diagonal-1"], corpus["diagonal-1"], seed=2, count=40
        )
        assert checked == 40

    def test_vanishing_catches_wrong_relation(self, corpus, trapezoid_relations):
        wrong = trapezoid_relations["diagonal-1"] + Poly.variable(
            trapezoid_relations["diagonal-1"].ring, "A1"
        )
        with pytest.raises(RelationShapeError):
            verify_vanishing(wrong, corpus["diagonal-1"], seed=3, count=40)

    def test_half_frame_vanishing(self, corpus, trapezoid_relations):
        checked = verify_parallelogram_frame_vanishing(
            trapezoid_relations["diagonal-1"], corpus["diagonal-1"], seed=4, count=40
        )
        assert checked == 40

    def test_half_frame_vanishing_needs_parallelogram_identity(
        self, corpus, trapezoid_relations
    ):
        wrong = trapezoid_relations["diagonal-1"] + Poly.constant(
            trapezoid_relations["diagonal-1"].ring, 1
        )
        with pytest.raises(RelationShapeError):
            verify_parallelogram_frame_vanishing(
                wrong, corpus["diagonal-1"], seed=5, count=10
            )


class TestLinearAlgebraHelpers:
    def test_monomials_of_degree(self):
        monos = monomials_of_degree(3, 2)
        assert len(monos) == 6
        assert all(sum(m) == 2 for m in monos)
        assert len(set(monos)) == 6

    def test_nullspace_of_rank_one_system(self):
        rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        basis = rational_nullspace(rows)
        assert len(basis) == 1
        x, y = basis[0]
        assert x + 2 * y == 0

    def test_nullspace_trivial(self):
        rows = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        assert rational_nullspace(rows) == []
