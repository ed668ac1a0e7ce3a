"""Sparse multivariate polynomials over the rationals.

A :class:`Ring` fixes an ordered tuple of variable names.  Monomials are
dense exponent tuples aligned with that order (small rings only, so
dense tuples are cheap and hashable), and a :class:`Poly` is a mapping
from monomial to nonzero ``Fraction`` coefficient.

The canonical text format for polynomials is graded lexicographic,
largest term first, with explicit ``*`` and ``^`` and coefficients
written as ``num/den``.  ``canonical_str`` and ``parse_polynomial`` are
inverse to each other on canonical output.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .exact import format_rational

__all__ = [
    "Ring",
    "Poly",
    "Monomial",
    "NotHomogeneousError",
    "PolySyntaxError",
    "mono_mul",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_degree",
    "lex_key",
    "grevlex_key",
    "deglex_key",
    "block_key",
    "canonical_term_key",
    "poly_divmod",
    "exact_quotient",
    "canonical_str",
    "parse_polynomial",
]

Monomial = tuple[int, ...]
Scalar = Fraction | int
OrderKey = Callable[[Monomial], tuple]


class NotHomogeneousError(ValueError):
    """Raised when a polynomial expected to be homogeneous is not."""


class PolySyntaxError(ValueError):
    """Raised when polynomial text does not match the canonical grammar."""


# ---------------------------------------------------------------------------
# rings and monomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ring:
    """An ordered list of variable names; the order fixes monomial layout."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]  # type: ignore[attr-defined]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index  # type: ignore[attr-defined]

    def subring(self, names: Sequence[str]) -> "Ring":
        for n in names:
            self.index(n)
        return Ring(tuple(names))

    def without(self, names: Iterable[str]) -> "Ring":
        drop = set(names)
        return Ring(tuple(n for n in self.names if n not in drop))

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    def var_monomial(self, name: str) -> Monomial:
        i = self.index(name)
        return tuple(1 if j == i else 0 for j in range(len(self.names)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient ``a / b``; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders (key functions: larger key means larger monomial)
# ---------------------------------------------------------------------------


def lex_key(mono: Monomial) -> tuple:
    return mono


def grevlex_key(mono: Monomial) -> tuple:
    return (sum(mono), tuple(-e for e in reversed(mono)))


def deglex_key(mono: Monomial) -> tuple:
    return (sum(mono), mono)


def block_key(n_elim: int) -> OrderKey:
    """Elimination order: graded reverse lex on the first ``n_elim``
    variables dominating graded reverse lex on the rest.

    Any monomial involving a variable from the leading block is larger
    than any monomial free of that block, so a Groebner basis under this
    order intersects cleanly with the kept subring.
    """

    def key(mono: Monomial) -> tuple:
        head, tail = mono[:n_elim], mono[n_elim:]
        return (
            sum(head),
            tuple(-e for e in reversed(head)),
            sum(tail),
            tuple(-e for e in reversed(tail)),
        )

    return key


def canonical_term_key(mono: Monomial) -> tuple:
    """Ascending sort key that puts canonical (graded lex) largest first."""
    return (-sum(mono), tuple(-e for e in mono))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Immutable-by-convention sparse polynomial with Fraction coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Scalar]):
        clean: dict[Monomial, Fraction] = {}
        width = len(ring)
        for mono, coeff in terms.items():
            if len(mono) != width:
                raise ValueError(f"monomial {mono} has wrong arity for ring {ring.names}")
            c = Fraction(coeff)
            if c:
                clean[mono] = c
        self.ring = ring
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring, {})

    @classmethod
    def one(cls, ring: Ring) -> "Poly":
        return cls(ring, {ring.unit_monomial(): Fraction(1)})

    @classmethod
    def constant(cls, ring: Ring, value: Scalar) -> "Poly":
        return cls(ring, {ring.unit_monomial(): Fraction(value)})

    @classmethod
    def variable(cls, ring: Ring, name: str) -> "Poly":
        return cls(ring, {ring.var_monomial(name): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Poly({canonical_str(self)!r})"

    def total_degree(self) -> int:
        """Total degree; zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, name: str) -> int:
        """Largest exponent of one variable; zero polynomial reports -1."""
        if not self.terms:
            return -1
        i = self.ring.index(name)
        return max(m[i] for m in self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(mono, Fraction(0))

    def coefficient_of_power(self, name: str, power: int) -> Fraction:
        """Scalar coefficient of the pure power ``name^power``."""
        i = self.ring.index(name)
        mono = tuple(power if j == i else 0 for j in range(len(self.ring)))
        return self.coefficient(mono)

    def constant_term(self) -> Fraction:
        return self.coefficient(self.ring.unit_monomial())

    def variables_used(self) -> set[str]:
        used: set[str] = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used.add(self.ring.names[i])
        return used

    def leading(self, key: OrderKey) -> tuple[Monomial, Fraction]:
        """Leading (monomial, coefficient) under a monomial order key."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=key)
        return mono, self.terms[mono]

    def sorted_terms(self, key: OrderKey) -> list[tuple[Monomial, Fraction]]:
        """Terms from largest to smallest under the given order."""
        return [(m, self.terms[m]) for m in sorted(self.terms, key=key, reverse=True)]

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    # -- arithmetic --------------------------------------------------------

    def _require_same_ring(self, other: "Poly") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring.names} vs {other.ring.names}")

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.ring, other)
        self._require_same_ring(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = terms.get(mono, Fraction(0)) + coeff
            if c:
                terms[mono] = c
            else:
                terms.pop(mono, None)
        out = object.__new__(Poly)
        out.ring, out.terms = self.ring, terms
        return out

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        out = object.__new__(Poly)
        out.ring = self.ring
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.ring, other)
        return self.__add__(-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return (-self).__add__(other)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            out = object.__new__(Poly)
            out.ring = self.ring
            out.terms = {m: k * c for m, k in self.terms.items()} if c else {}
            return out
        self._require_same_ring(other)
        terms: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = mono_mul(ma, mb)
                c = terms.get(mono, Fraction(0)) + ca * cb
                if c:
                    terms[mono] = c
                else:
                    terms.pop(mono, None)
        out = object.__new__(Poly)
        out.ring, out.terms = self.ring, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structural operations --------------------------------------------

    def substitute(self, images: Mapping[str, "Poly | Scalar"], ring: Ring | None = None) -> "Poly":
        """Replace variables by polynomials or scalars of a target ring.

        Variables absent from ``images`` must exist in the target ring
        and are carried across unchanged.
        """
        target = ring if ring is not None else self.ring
        table: dict[int, Poly] = {}
        for i, name in enumerate(self.ring.names):
            if name in images:
                img = images[name]
                if isinstance(img, (int, Fraction)):
                    table[i] = Poly.constant(target, img)
                else:
                    if img.ring != target:
                        raise ValueError(f"image of {name!r} lives in the wrong ring")
                    table[i] = img
            else:
                table[i] = Poly.variable(target, name)
        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            got = powers.get((i, e))
            if got is None:
                got = table[i] ** e
                powers[(i, e)] = got
            return got

        result = Poly.zero(target)
        for mono, coeff in self.terms.items():
            piece = Poly.constant(target, coeff)
            for i, e in enumerate(mono):
                if e:
                    piece = piece * power(i, e)
            result = result + piece
        return result

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at rational values; every used variable must be assigned."""
        values: dict[int, Fraction] = {}
        for name in self.variables_used():
            if name not in assignment:
                raise KeyError(f"no value for variable {name!r}")
            values[self.ring.index(name)] = Fraction(assignment[name])
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            acc = coeff
            for i, e in enumerate(mono):
                if e:
                    acc *= values[i] ** e
            total += acc
        return total

    def restrict(self, subring: Ring) -> "Poly":
        """Reinterpret in a smaller ring; fails if other variables occur."""
        positions = [self.ring.index(n) for n in subring.names]
        keep = set(positions)
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            for i, e in enumerate(mono):
                if e and i not in keep:
                    raise ValueError(
                        f"variable {self.ring.names[i]!r} occurs; cannot restrict to {subring.names}"
                    )
            terms[tuple(mono[i] for i in positions)] = coeff
        return Poly(subring, terms)

    def embed(self, superring: Ring) -> "Poly":
        """Reinterpret in a larger ring containing all current variables."""
        positions = [superring.index(n) for n in self.ring.names]
        width = len(superring)
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            big = [0] * width
            for pos, e in zip(positions, mono):
                big[pos] = e
            terms[tuple(big)] = coeff
        return Poly(superring, terms)

    def partial(self, name: str) -> "Poly":
        """Partial derivative with respect to one variable."""
        i = self.ring.index(name)
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            e = mono[i]
            if not e:
                continue
            lowered = tuple(x - 1 if j == i else x for j, x in enumerate(mono))
            terms[lowered] = terms.get(lowered, Fraction(0)) + coeff * e
        return Poly(self.ring, terms)

    def weighted_degree(self, weights: Mapping[str, int]) -> int:
        """Common weighted degree of all terms; raises if terms disagree."""
        if not self.terms:
            raise NotHomogeneousError("zero polynomial has no homogeneous degree")
        w = [weights.get(name, 0) for name in self.ring.names]
        degrees = {sum(wi * e for wi, e in zip(w, mono)) for mono in self.terms}
        if len(degrees) != 1:
            raise NotHomogeneousError(
                f"terms have distinct weighted degrees {sorted(degrees)}"
            )
        return degrees.pop()

    def homogeneous_degree(self) -> int:
        """Common total degree of all terms; raises if not homogeneous."""
        return self.weighted_degree({n: 1 for n in self.ring.names})

    def content_and_primitive(self) -> tuple[Fraction, "Poly"]:
        """Split into content times primitive part.

        The primitive part has coprime integer coefficients and its
        canonically first term (graded lex largest) has positive sign.
        Zero splits as (0, 0).
        """
        if not self.terms:
            return Fraction(0), self
        num_gcd = 0
        den_lcm = 1
        for c in self.terms.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        first = min(self.terms, key=canonical_term_key)
        if self.terms[first] < 0:
            content = -content
        return content, self * (1 / content)


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------


def poly_divmod(f: Poly, g: Poly, key: OrderKey = grevlex_key) -> tuple[Poly, Poly]:
    """Divide by a single polynomial: ``f == q * g + r`` where no term of
    ``r`` is divisible by the leading monomial of ``g``.

    For a single divisor the remainder vanishes exactly when ``g``
    divides ``f``, independent of the chosen order.
    """
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    g_mono, g_coeff = g.leading(key)
    quot = Poly.zero(f.ring)
    rem = Poly.zero(f.ring)
    work = f
    while not work.is_zero():
        mono, coeff = work.leading(key)
        if mono_divides(g_mono, mono):
            t = Poly(f.ring, {mono_div(mono, g_mono): coeff / g_coeff})
            quot = quot + t
            work = work - t * g
        else:
            t = Poly(f.ring, {mono: coeff})
            rem = rem + t
            work = work - t
    return quot, rem


def exact_quotient(f: Poly, g: Poly) -> Poly | None:
    """``f / g`` when the division is exact, else None."""
    quot, rem = poly_divmod(f, g)
    return quot if rem.is_zero() else None


# ---------------------------------------------------------------------------
# canonical text format
# ---------------------------------------------------------------------------


def _format_term(ring: Ring, mono: Monomial, coeff: Fraction) -> str:
    factors = []
    for name, e in zip(ring.names, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    magnitude = abs(coeff)
    if not factors:
        return format_rational(magnitude)
    if magnitude == 1:
        return "*".join(factors)
    return format_rational(magnitude) + "*" + "*".join(factors)


def canonical_str(poly: Poly) -> str:
    """Graded lex text form, largest term first, explicit ``*`` and ``^``."""
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for mono in sorted(poly.terms, key=canonical_term_key):
        coeff = poly.terms[mono]
        body = _format_term(poly.ring, mono, coeff)
        if not parts:
            parts.append(body if coeff > 0 else "-" + body)
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts)


_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip() == "":
                break
            at = pos + len(rest) - len(rest.lstrip())
            raise PolySyntaxError(
                f"unexpected character {text[at]!r} at position {at}"
            )
        for kind in ("int", "name", "op"):
            if m.group(kind) is not None:
                tokens.append((kind, m.group(kind), m.start(kind)))
                break
        pos = m.end()
    return tokens


class _Parser:
    """Recursive descent over the canonical grammar.

    poly   := [sign] term (sign term)*
    term   := factor ('*' factor)*
    factor := rational | NAME ['^' INT]

    Every syntax error reports the character position it was noticed at.
    """

    def __init__(self, ring: Ring, tokens: list[tuple[str, str, int]], length: int):
        self.ring = ring
        self.tokens = tokens
        self.length = length
        self.pos = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def peek_is(self, kind: str, text: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == kind and tok[1] == text

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise PolySyntaxError(
                f"unexpected end of polynomial text at position {self.length}"
            )
        self.pos += 1
        return tok

    def parse(self) -> Poly:
        total = Poly.zero(self.ring)
        sign = 1
        tok = self.peek()
        if tok is None:
            raise PolySyntaxError("empty polynomial text")
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            sign = -1
        elif tok[0] == "op" and tok[1] == "+":
            raise PolySyntaxError(
                f"polynomial may not start with '+' (position {tok[2]})"
            )
        total = total + self.term(sign)
        while (tok := self.peek()) is not None:
            if tok[0] == "op" and tok[1] == "+":
                sign = 1
            elif tok[0] == "op" and tok[1] == "-":
                sign = -1
            else:
                raise PolySyntaxError(
                    f"expected '+' or '-' between terms, got {tok[1]!r} "
                    f"at position {tok[2]}"
                )
            self.take()
            total = total + self.term(sign)
        return total

    def term(self, sign: int) -> Poly:
        result = self.factor() * sign
        while self.peek_is("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Poly:
        kind, text, at = self.take()
        if kind == "int":
            num = int(text)
            if self.peek_is("op", "/"):
                self.take()
                dkind, dtext, dat = self.take()
                if dkind != "int":
                    raise PolySyntaxError(
                        f"expected integer denominator after '/' at position {dat}"
                    )
                den = int(dtext)
                if den == 0:
                    raise PolySyntaxError(f"zero denominator at position {dat}")
                return Poly.constant(self.ring, Fraction(num, den))
            return Poly.constant(self.ring, num)
        if kind == "name":
            if text not in self.ring:
                raise PolySyntaxError(
                    f"unknown variable {text!r} at position {at} "
                    f"(ring has {self.ring.names})"
                )
            base = Poly.variable(self.ring, text)
            if self.peek_is("op", "^"):
                self.take()
                ekind, etext, eat = self.take()
                if ekind != "int":
                    raise PolySyntaxError(
                        f"expected integer exponent after '^' at position {eat} "
                        "(note '**' is invalid)"
                    )
                return base ** int(etext)
            return base
        raise PolySyntaxError(
            f"expected a coefficient or variable, got {text!r} at position {at}"
        )


def parse_polynomial(text: str, ring: Ring) -> Poly:
    """Parse canonical polynomial text over the given ring.

    Strict about the grammar: ``**`` is rejected, every product needs an
    explicit ``*``, and only variables declared in the ring may appear.
    Syntax errors report the character position of the offense.
    """
    parser = _Parser(ring, _tokenize(text), len(text))
    return parser.parse()
