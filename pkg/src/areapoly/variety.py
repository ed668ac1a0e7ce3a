"""Area relation polynomials of a triangulated trapezoid.

Fix a combinatorial triangulation with triangles named ``B1, ..., Bn``
(any names work).  Every drawing gives one doubled area per triangle
plus the frame area ``U`` of the corner triangle ``(p, s, q)``, so
drawings trace out a subset of ``(U, B1, ..., Bn)`` space.  Because the
pinned gauge has exactly ``2 + 2i`` free parameters (``t``, ``lam`` and
one coordinate pair per interior vertex) against ``n + 1`` coordinates,
that image closes up into an irreducible hypersurface; its defining
polynomial is the trapezoid relation.  Setting the ratio ``t`` to one
first and dropping ``U`` instead yields the parallelogram relation.

Two independent routes compute these polynomials:

- :func:`trapezoid_polynomial` / :func:`parallelogram_polynomial`
  eliminate the gauge variables from the graph ideal of the area map
  with a block-order Groebner basis;
- :func:`interpolated_relation` samples random drawings and solves an
  exact linear system for the lowest-degree homogeneous relation among
  the observed area vectors, never touching the Groebner machinery.

The two routes must deliver literally the same normalized polynomial;
the test suite insists on it.

Normalization: relations are primitive integer polynomials.  A
trapezoid relation of degree ``d`` carries ``U^d`` with coefficient
one (it is monic in the frame variable); a parallelogram relation has
a positive coefficient on its canonically first term.

The module also provides the closed-form relation for the diagonal
staircase families, the restriction profile ``U^a * (U + B)^b`` of a
relation to a single triangle, and the doubling substitution
``U -> -(B1 + ... + Bn)``, ``Bi -> 2*Bi``, which lands in a multiple of
the parallelogram relation.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .areamap import gauged_areas, random_drawing, Drawing
from .groebner import GuardConfig, eliminate, principal_generator
from .poly import (
    Monomial,
    Poly,
    Ring,
    canonical_str,
    exact_quotient,
)
from .triangulation import CombinatorialTriangulation

__all__ = [
    "FRAME_VARIABLE",
    "RelationShapeError",
    "FamilyIdentityError",
    "OracleError",
    "trapezoid_polynomial",
    "parallelogram_polynomial",
    "relation_ring",
    "gauge_parameter_count",
    "independence_rank",
    "areas_algebraically_independent",
    "diagonal_relation_formula",
    "is_frame_monic",
    "is_monic_in_every_variable",
    "frame_power_profile",
    "doubling_substitution",
    "family_quotient",
    "interpolated_relation",
    "verify_vanishing",
    "verify_parallelogram_frame_vanishing",
    "rational_nullspace",
    "monomials_of_degree",
]

FRAME_VARIABLE = "U"


class RelationShapeError(ValueError):
    """A computed relation violates an expected structural property."""


class FamilyIdentityError(ValueError):
    """The doubling substitution is not a multiple of the parallelogram relation."""


class OracleError(RuntimeError):
    """The sampling oracle could not pin down a unique relation."""


# ---------------------------------------------------------------------------
# elimination route
# ---------------------------------------------------------------------------


def relation_ring(tri: CombinatorialTriangulation, with_frame: bool = True) -> Ring:
    """The ring of one variable per triangle, frame variable first."""
    names = tri.triangle_names
    if with_frame:
        names = (FRAME_VARIABLE, *names)
    return Ring(names)


def gauge_parameter_count(tri: CombinatorialTriangulation) -> int:
    """Free parameters of the pinned gauge: ``t``, ``lam``, and one
    coordinate pair per interior vertex."""
    return 2 + 2 * len(tri.interior_vertices())


def _normalize_relation(poly: Poly, frame: str | None) -> Poly:
    """Primitive integer form with the documented sign convention."""
    _, prim = poly.content_and_primitive()
    if frame is not None and frame in prim.ring:
        top = prim.coefficient_of_power(frame, prim.total_degree())
        if top < 0:
            prim = -prim
    return prim


def trapezoid_polynomial(
    tri: CombinatorialTriangulation, guard: GuardConfig = GuardConfig()
) -> Poly:
    """The defining polynomial of the closed area variety of ``tri``.

    Eliminates all gauge variables from the graph ideal
    ``{U - W_frame} + {Bi - Wi}``; the result is homogeneous, primitive
    with integer coefficients, and normalized so the pure frame power
    has coefficient one.
    """
    tri.require_valid()
    gauge = gauged_areas(tri)
    rel = relation_ring(tri, with_frame=True)
    combined = (*gauge.ring.names, *rel.names)
    if len(set(combined)) != len(combined):
        raise ValueError(
            "triangle names collide with gauge coordinate names; rename the triangles"
        )
    big = Ring(combined)
    gens = [Poly.variable(big, FRAME_VARIABLE) - gauge.frame.embed(big)]
    for name in tri.triangle_names:
        gens.append(Poly.variable(big, name) - gauge.areas[name].embed(big))
    basis = eliminate(gens, list(gauge.ring.names), guard=guard)
    relation = _normalize_relation(principal_generator(basis), FRAME_VARIABLE)
    relation.homogeneous_degree()
    return relation


def parallelogram_polynomial(
    tri: CombinatorialTriangulation, guard: GuardConfig = GuardConfig()
) -> Poly:
    """The relation among triangle areas when the trapezoid ratio is one.

    Same elimination as :func:`trapezoid_polynomial` but with ``t``
    specialized to one and no frame variable; normalized primitive with
    a positive canonically-first coefficient.
    """
    tri.require_valid()
    gauge = gauged_areas(tri)
    small = gauge.ring.without(["t"])
    rel = relation_ring(tri, with_frame=False)
    combined = (*small.names, *rel.names)
    if len(set(combined)) != len(combined):
        raise ValueError(
            "triangle names collide with gauge coordinate names; rename the triangles"
        )
    big = Ring(combined)
    gens = []
    for name in tri.triangle_names:
        specialized = gauge.areas[name].substitute({"t": 1}, ring=small)
        gens.append(Poly.variable(big, name) - specialized.embed(big))
    basis = eliminate(gens, list(small.names), guard=guard)
    relation = _normalize_relation(principal_generator(basis), None)
    relation.homogeneous_degree()
    return relation


def independence_rank(
    tri: CombinatorialTriangulation, seed: int = 0, parallelogram: bool = False
) -> int:
    """Jacobian rank of the area map at a random rational gauge point.

    A full rank (equal to :func:`gauge_parameter_count`, or one less in
    parallelogram mode) certifies that the image has the dimension the
    principality argument expects.
    """
    gauge = gauged_areas(tri)
    polys = [gauge.frame, *gauge.areas.values()]
    names = list(gauge.ring.names)
    if parallelogram:
        polys = [p.substitute({"t": 1}) for p in polys[1:]]
        names.remove("t")
    rng = random.Random(seed)
    point = {
        n: Fraction(rng.randint(-99, 99), rng.choice((1, 2, 3, 5, 7)))
        for n in gauge.ring.names
    }
    rows = [[p.partial(n).evaluate(point) for n in names] for p in polys]
    null = rational_nullspace(rows)
    return len(names) - len(null)


# ---------------------------------------------------------------------------
# closed form for the diagonal staircase families
# ---------------------------------------------------------------------------


def diagonal_relation_formula(n: int) -> Poly:
    """Trapezoid relation of the diagonal family, by explicit formula.

    With partial sums ``L_k = U + (A1 + B1) + ... + (Ak + Bk)`` and
    ``L_0 = U``, the relation is the product ``L_1 * ... * L_(n+1)``
    minus the sum over ``k`` of ``A(k+1)`` times the product of all
    ``L_j`` with ``j`` outside ``{k, k+1}``.  This route never touches
    the elimination machinery and anchors its output in the tests.
    """
    if n < 0:
        raise ValueError("family index must be nonnegative")
    names = (
        FRAME_VARIABLE,
        *(f"A{i}" for i in range(1, n + 2)),
        *(f"B{i}" for i in range(1, n + 2)),
    )
    ring = Ring(names)
    frame = Poly.variable(ring, FRAME_VARIABLE)
    partial_sums = [frame]
    for k in range(1, n + 2):
        partial_sums.append(
            partial_sums[-1]
            + Poly.variable(ring, f"A{k}")
            + Poly.variable(ring, f"B{k}")
        )
    relation = Poly.one(ring)
    for j in range(1, n + 2):
        relation = relation * partial_sums[j]
    for k in range(n + 1):
        term = Poly.variable(ring, f"A{k + 1}")
        for j in range(n + 2):
            if j not in (k, k + 1):
                term = term * partial_sums[j]
        relation = relation - term
    return _normalize_relation(relation, FRAME_VARIABLE)


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------


def is_monic_in_every_variable(relation: Poly) -> bool:
    """Whether every variable's pure top power has coefficient ``+-1``.

    The top power is the total degree of the relation, so this is
    stronger than a unit leading coefficient: each variable on its own
    must reach the total degree, with unit coefficient when it does.
    """
    degree = relation.total_degree()
    if degree < 0:
        return False
    return all(
        abs(relation.coefficient_of_power(name, degree)) == 1
        for name in relation.ring.names
    )


def areas_algebraically_independent(
    tri: CombinatorialTriangulation, guard: GuardConfig = GuardConfig()
) -> bool:
    """Whether the triangle areas alone satisfy no polynomial relation.

    Runs the same elimination as :func:`trapezoid_polynomial` but with
    no frame variable and the trapezoid ratio left free.  A zero
    elimination ideal (empty basis) certifies that every relation on
    the closed area variety genuinely involves the frame variable.
    """
    tri.require_valid()
    gauge = gauged_areas(tri)
    rel = relation_ring(tri, with_frame=False)
    combined = (*gauge.ring.names, *rel.names)
    if len(set(combined)) != len(combined):
        raise ValueError(
            "triangle names collide with gauge coordinate names; rename the triangles"
        )
    big = Ring(combined)
    gens = [
        Poly.variable(big, name) - gauge.areas[name].embed(big)
        for name in tri.triangle_names
    ]
    basis = eliminate(gens, list(gauge.ring.names), guard=guard)
    return not basis


def verify_parallelogram_frame_vanishing(
    relation: Poly,
    tri: CombinatorialTriangulation,
    seed: int = 0,
    count: int = 100,
) -> int:
    """Evaluate a frame relation on parallelogram drawings with the
    frame slot forced to minus half the total area.

    On a parallelogram the two corner frame triangles are congruent, so
    the frame area is minus half the doubled quadrilateral area; the
    relation must vanish after that substitution.  Returns the number
    of drawings checked, raising :class:`RelationShapeError` on the
    first nonzero value.
    """
    rng = random.Random(seed)
    for index in range(count):
        drawing = random_drawing(tri, rng, parallelogram=True)
        values = drawing.area_vector().as_dict()
        values[FRAME_VARIABLE] = -sum(values.values(), Fraction(0)) / 2
        result = relation.evaluate(values)
        if result != 0:
            raise RelationShapeError(
                f"relation evaluates to {result} on parallelogram drawing "
                f"{index} (seed {seed}) with the half-sum frame value"
            )
    return count


def is_frame_monic(relation: Poly, frame: str = FRAME_VARIABLE) -> bool:
    """True when the pure power ``frame^degree`` has coefficient one."""
    return relation.coefficient_of_power(frame, relation.total_degree()) == 1


def frame_power_profile(
    relation: Poly, frame: str = FRAME_VARIABLE
) -> dict[str, tuple[int, int]]:
    """Per-triangle restriction exponents ``(a, b)``.

    Setting every other triangle variable to zero must collapse the
    relation to ``frame^a * (frame + B)^b`` with ``a + b`` equal to the
    total degree; anything else raises :class:`RelationShapeError`.
    """
    degree = relation.total_degree()
    frame_poly = Poly.variable(relation.ring, frame)
    profile: dict[str, tuple[int, int]] = {}
    for name in relation.ring.names:
        if name == frame:
            continue
        zeroed = {n: 0 for n in relation.ring.names if n not in (frame, name)}
        restricted = relation.substitute(zeroed)
        b = restricted.degree_in(name)
        a = degree - b
        if a < 0:
            raise RelationShapeError(f"restriction to {name} exceeds the total degree")
        expected = (frame_poly ** a) * ((frame_poly + Poly.variable(relation.ring, name)) ** b)
        if restricted != expected:
            raise RelationShapeError(
                f"restriction to {name} is {canonical_str(restricted)}, "
                f"not of the shape {frame}^a * ({frame} + {name})^b"
            )
        profile[name] = (a, b)
    return profile


def doubling_substitution(relation: Poly, frame: str = FRAME_VARIABLE) -> Poly:
    """Substitute ``frame := -(sum of areas)`` and double every area.

    The result lives in the frame-free ring and, for relations coming
    from an actual triangulation, is divisible by the parallelogram
    relation of the same triangulation.
    """
    names = tuple(n for n in relation.ring.names if n != frame)
    target = Ring(names)
    total = Poly.zero(target)
    for n in names:
        total = total + Poly.variable(target, n)
    images: dict[str, Poly] = {frame: -total}
    for n in names:
        images[n] = Poly.variable(target, n) * 2
    return relation.substitute(images, ring=target)


def family_quotient(
    trapezoid_relation: Poly, parallelogram_relation: Poly, frame: str = FRAME_VARIABLE
) -> Poly:
    """Exact quotient of the doubling substitution by the parallelogram
    relation; raises :class:`FamilyIdentityError` if the division fails."""
    doubled = doubling_substitution(trapezoid_relation, frame)
    if parallelogram_relation.ring != doubled.ring:
        parallelogram_relation = parallelogram_relation.embed(doubled.ring)
    quotient = exact_quotient(doubled, parallelogram_relation)
    if quotient is None:
        raise FamilyIdentityError(
            "doubling substitution is not divisible by the parallelogram relation"
        )
    return quotient


# ---------------------------------------------------------------------------
# sampling oracle
# ---------------------------------------------------------------------------


def monomials_of_degree(width: int, degree: int) -> list[Monomial]:
    """All exponent tuples of the given total degree, lexicographically."""
    if width == 0:
        return [()] if degree == 0 else []
    out: list[Monomial] = []

    def build(prefix: tuple[int, ...], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            build(prefix + (e,), remaining - e, slots - 1)

    build((), degree, width)
    return out


def rational_nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right nullspace of a matrix, exact over the rationals."""
    if not rows:
        raise ValueError("nullspace of an empty matrix is ambiguous")
    width = len(rows[0])
    mat = [list(row) for row in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        pivot_row = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                factor = mat[i][col]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    free = [c for c in range(width) if c not in set(pivots)]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for row_index, pc in enumerate(pivots):
            vec[pc] = -mat[row_index][fc]
        basis.append(vec)
    return basis


def _drawing_values(drawing: Drawing, ring: Ring, frame: str) -> dict[str, Fraction]:
    areas = drawing.area_vector().as_dict()
    values = {}
    for name in ring.names:
        values[name] = drawing.frame_area() if name == frame else areas[name]
    return values


def interpolated_relation(
    tri: CombinatorialTriangulation,
    seed: int = 0,
    max_degree: int = 8,
    parallelogram: bool = False,
    samples_per_monomial: int = 3,
) -> Poly:
    """Lowest-degree homogeneous relation among sampled area vectors.

    Sweeps the degree upward; at each degree it samples three random
    drawings per candidate monomial, solves the exact linear system for
    vanishing coefficient vectors, and stops at the first degree where
    the nullspace is nontrivial.  That nullspace must be a line, and
    the resulting polynomial must vanish on a fresh verification batch;
    otherwise :class:`OracleError` is raised.  The normalization matches
    the elimination route, so results are directly comparable.
    """
    tri.require_valid()
    ring = relation_ring(tri, with_frame=not parallelogram)
    rng = random.Random(seed)
    for degree in range(1, max_degree + 1):
        monos = monomials_of_degree(len(ring), degree)
        rows = []
        for _ in range(samples_per_monomial * len(monos)):
            drawing = random_drawing(tri, rng, parallelogram=parallelogram)
            values = _drawing_values(drawing, ring, FRAME_VARIABLE)
            point = [values[n] for n in ring.names]
            rows.append(
                [
                    Fraction(
                        _monomial_value(point, mono)
                    )
                    for mono in monos
                ]
            )
        null = rational_nullspace(rows)
        if not null:
            continue
        if len(null) > 1:
            raise OracleError(
                f"nullspace at degree {degree} has dimension {len(null)}; "
                "expected a single relation at the first nontrivial degree"
            )
        candidate = Poly(ring, dict(zip(monos, null[0])))
        candidate = _normalize_relation(
            candidate, None if parallelogram else FRAME_VARIABLE
        )
        for _ in range(24):
            drawing = random_drawing(tri, rng, parallelogram=parallelogram)
            if candidate.evaluate(_drawing_values(drawing, ring, FRAME_VARIABLE)) != 0:
                raise OracleError(
                    f"degree-{degree} candidate fails on a verification drawing"
                )
        return candidate
    raise OracleError(f"no homogeneous relation found up to degree {max_degree}")


def _monomial_value(point: list[Fraction], mono: Monomial) -> Fraction:
    value = Fraction(1)
    for base, exp in zip(point, mono):
        if exp:
            value *= base ** exp
    return value


def verify_vanishing(
    relation: Poly,
    tri: CombinatorialTriangulation,
    seed: int = 0,
    count: int = 100,
    parallelogram: bool = False,
) -> int:
    """Evaluate the relation on random drawings; returns the number checked.

    Raises :class:`RelationShapeError` with the offending drawing when a
    nonzero value shows up.
    """
    rng = random.Random(seed)
    for index in range(count):
        drawing = random_drawing(tri, rng, parallelogram=parallelogram)
        values = _drawing_values(drawing, relation.ring, FRAME_VARIABLE)
        result = relation.evaluate(values)
        if result != 0:
            raise RelationShapeError(
                f"relation evaluates to {result} on drawing {index} (seed {seed})"
            )
    return count
