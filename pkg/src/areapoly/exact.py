"""Exact rational scalars: parsing, formatting, and 2-adic valuation.

All quantities in this package are rational numbers represented by
``fractions.Fraction``; nothing here ever touches floating point.  This
module adds the few scalar utilities the rest of the package needs on
top of the stdlib type: a strict text codec for rationals and the
2-adic valuation with a totally ordered infinity sentinel.
"""

from __future__ import annotations

import re
from fractions import Fraction

__all__ = [
    "INFINITY",
    "val2",
    "format_rational",
    "parse_rational",
    "RationalSyntaxError",
]


class RationalSyntaxError(ValueError):
    """Raised when a rational literal does not match ``num`` or ``num/den``."""


class _Infinity:
    """Sentinel larger than every integer, absorbing under addition.

    Used as the 2-adic valuation of zero so that valuation comparisons
    (``val2(a) <= val2(b)`` and friends) are total without special
    casing zero at every call site.
    """

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITY"

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return other is self

    def __gt__(self, other: object) -> bool:
        return other is not self

    def __ge__(self, other: object) -> bool:
        return True

    def __add__(self, other: object) -> "_Infinity":
        return self

    __radd__ = __add__

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("areapoly.exact.INFINITY")


INFINITY = _Infinity()


def _twos_in(n: int) -> int:
    """Exponent of 2 in a nonzero integer."""
    n = abs(n)
    return (n & -n).bit_length() - 1


def val2(q: Fraction | int) -> int | _Infinity:
    """2-adic valuation of a rational: ``val2(2^k * odd/odd) == k``.

    Returns ``INFINITY`` for zero.  Examples: ``val2(4) == 2``,
    ``val2(Fraction(3, 8)) == -3``, ``val2(5) == 0``.
    """
    q = Fraction(q)
    if q == 0:
        return INFINITY
    return _twos_in(q.numerator) - _twos_in(q.denominator)


_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*([1-9][0-9]*)\s*)?$")


def format_rational(q: Fraction | int) -> str:
    """Canonical text for a rational: ``num/den`` in lowest terms, ``/1`` omitted."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``num`` or ``num/den``; the denominator must be a positive integer.

    Rejects floats, exponents, and a signed denominator.  The input need
    not be in lowest terms; the result always is (``Fraction`` reduces).
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise RationalSyntaxError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)
