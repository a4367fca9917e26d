import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gainrank.gains import GainError, Numeric, RationalAngle, gain_product


def test_angle_reduced_mod_one():
    assert RationalAngle(5, 4) == RationalAngle(1, 4)
    assert RationalAngle(-1, 4) == RationalAngle(3, 4)
    assert RationalAngle(2, 4).q == 2


def test_zero_denominator_rejected():
    with pytest.raises(GainError):
        RationalAngle(1, 0)


def test_conjugate_negates_angle():
    assert RationalAngle(1, 4).conjugate() == RationalAngle(3, 4)
    assert RationalAngle(0).conjugate() == RationalAngle(0)


def test_quarter_turns_are_exact():
    assert RationalAngle(1, 4).to_complex() == 1j
    assert RationalAngle(1, 2).to_complex() == -1
    assert RationalAngle(1, 4).gaussian() == (0, 1)
    assert RationalAngle(1, 8).gaussian() is None


def test_str_forms():
    assert str(RationalAngle(0)) == "1"
    assert str(RationalAngle(3, 8)) == "3/8"


def test_numeric_validation():
    Numeric(0.6, 0.8)
    with pytest.raises(GainError):
        Numeric(1.0, 0.1)
    z = Numeric.from_complex(cmath.exp(0.3j) * (1 + 1e-14))
    assert abs(abs(z.to_complex()) - 1) < 1e-15


def test_mixed_product_is_numeric():
    g = RationalAngle(1, 4) * Numeric(0.6, 0.8)
    assert isinstance(g, Numeric)
    assert abs(g.to_complex() - 1j * (0.6 + 0.8j)) < 1e-12


@given(st.integers(-50, 50), st.integers(1, 64), st.integers(-50, 50), st.integers(1, 64))
def test_product_matches_complex(p1, q1, p2, q2):
    a, b = RationalAngle(p1, q1), RationalAngle(p2, q2)
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-12
    assert (a * a.conjugate()) == RationalAngle(0)
    assert gain_product([a, b]) == a * b
    assert (a * b).angle == (Fraction(p1, q1) + Fraction(p2, q2)) % 1
