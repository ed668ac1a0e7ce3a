"""2-adic valuation and rational text codec."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from areapoly.exact import (
    INFINITY,
    RationalSyntaxError,
    format_rational,
    parse_rational,
    val2,
)

nonzero_rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=512
).filter(lambda f: f != 0)


class TestVal2:
    @pytest.mark.parametrize(
        "value, expected",
        [
            (1, 0),
            (2, 1),
            (-4, 2),
            (12, 2),
            (Fraction(1, 2), -1),
            (Fraction(3, 8), -3),
            (Fraction(-5, 6), -1),
            (Fraction(7), 0),
            (Fraction(2, 3), 1),
        ],
    )
    def test_values(self, value, expected):
        assert val2(value) == expected

    def test_zero_is_infinite(self):
        assert val2(0) is INFINITY
        assert val2(Fraction(0)) is INFINITY

    def test_infinity_ordering(self):
        assert INFINITY > 10**6
        assert INFINITY >= INFINITY
        assert not INFINITY < -(10**6)
        assert not INFINITY <= 0
        assert min(INFINITY, 3) == 3

    def test_infinity_absorbs_addition(self):
        assert INFINITY + 5 is INFINITY
        assert 5 + INFINITY is INFINITY

    @given(nonzero_rationals, nonzero_rationals)
    def test_multiplicative(self, a, b):
        assert val2(a * b) == val2(a) + val2(b)

    @given(nonzero_rationals, nonzero_rationals)
    def test_ultrametric(self, a, b):
        lower = min(val2(a), val2(b))
        assert val2(a + b) >= lower
        if val2(a) != val2(b):
            assert val2(a + b) == lower


class TestRationalCodec:
    @pytest.mark.parametrize(
        "text, value",
        [
            ("0", Fraction(0)),
            ("-7", Fraction(-7)),
            ("3/4", Fraction(3, 4)),
            ("-10/4", Fraction(-5, 2)),
            (" 9 / 12 ", Fraction(3, 4)),
        ],
    )
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("bad", ["", "1/0", "1.5", "2/-3", "a", "1/ ", "--2"])
    def test_parse_rejects(self, bad):
        with pytest.raises(RationalSyntaxError):
            parse_rational(bad)

    def test_format(self):
        assert format_rational(Fraction(5)) == "5"
        assert format_rational(Fraction(-3, 8)) == "-3/8"

    @given(st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4))
    def test_round_trip(self, value):
        assert parse_rational(format_rational(value)) == value
