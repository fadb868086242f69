from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polymaass.scalars import Scalar, ZERO, ONE


def test_zero_is_empty():
    assert Scalar({0: 0, 2: 0}).is_zero()
    assert not Scalar({0: 1}).is_zero()
    assert Scalar() == ZERO


def test_arithmetic():
    a = Scalar({0: Fraction(1, 2), -1: 3})     # 1/2 + 3/pi
    b = Scalar({1: Fraction(2)})               # 2 pi
    assert a + (-a) == ZERO
    assert a * b == Scalar({1: 1, 0: 6})
    assert (a - a).is_zero()
    assert ONE * a == a


def test_rational_value():
    assert Scalar.from_rational(Fraction(7, 3)).rational_value() == Fraction(7, 3)
    with pytest.raises(ValueError):
        Scalar.pi_power(1).rational_value()


rationals = st.fractions(max_denominator=10 ** 4)
scalars = st.dictionaries(st.integers(-3, 3), rationals, max_size=4).map(Scalar)


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


@given(scalars)
def test_json_round_trip(a):
    assert Scalar.from_json(a.to_json()) == a


def test_to_str():
    assert Scalar({-1: 3}).to_str() == "3*pi^-1"
    assert Scalar({0: Fraction(-1, 2)}).to_str() == "-1/2"
