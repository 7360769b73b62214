from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from core.exceptions import PrecisionError
from padic.numbers import PAdic


def test_valuation_of_uniformizer_square_times_unit():
    p = 5
    a = PAdic.uniformizer(p) ** 2 * PAdic.from_int(p, 3)
    assert a.valuation == 2
    assert a.abs_exponent() == 2


@pytest.mark.parametrize("p", [2, 3, 7])
def test_product_of_conjugates(p):
    left = PAdic.from_int(p, 1 + p) * PAdic.from_int(p, 1 - p)
    assert left == PAdic.from_int(p, 1 - p * p)


def test_absolute_value_of_uniformizer():
    assert PAdic.uniformizer(3).abs_exponent() == 1


def test_fraction_round_trip_through_lift():
    a = PAdic.from_fraction(3, Fraction(5, 9))
    assert a.valuation == -2
    assert a.lift() == Fraction(5, 9)


def test_cancellation_keeps_absolute_precision():
    difference = PAdic(3, 0, 1, precision=12) - PAdic(3, 0, 1, precision=5)
    assert difference.is_zero
    assert difference.absolute_precision == 5
    assert str(difference) == "O(3^5)"
    assert difference.in_ideal(5)
    with pytest.raises(PrecisionError):
        difference.in_ideal(6)
    with pytest.raises(PrecisionError):
        difference.digits(6)


def test_inexact_zero_limits_later_sums():
    difference = PAdic.from_int(3, 4, precision=3) - PAdic.from_int(3, 4)
    total = difference + PAdic.from_int(3, 1)
    assert total.precision == 3
    assert (difference + PAdic.from_int(3, 27)).absolute_precision == 3
    assert (difference * PAdic.uniformizer(3)).absolute_precision == 4
    assert (difference * PAdic.zero(3)).absolute_precision is None


def test_exact_zero_lies_in_every_ideal():
    zero = PAdic.zero(7)
    assert zero.in_ideal(100)
    assert zero.absolute_precision is None
    assert zero + PAdic.from_int(7, 2) == PAdic.from_int(7, 2)


def test_inexact_zero_round_trips_through_json():
    difference = PAdic(5, 1, 2, precision=4) - PAdic(5, 1, 2)
    restored = PAdic.from_json(difference.to_json())
    assert restored.is_zero
    assert restored.bound == 5


def test_addition_tracks_precision_loss():
    a = PAdic.from_int(5, 1, precision=6)
    b = PAdic.from_int(5, 24, precision=6)
    total = a + b
    assert total.valuation == 2
    assert total.precision == 4


def test_division_by_zero_sentinel():
    with pytest.raises(ZeroDivisionError):
        PAdic.from_int(3, 2) / PAdic.zero(3)


def test_precision_floor(settings):
    settings.PADIC_PRECISION_FLOOR = 3
    with pytest.raises(PrecisionError):
        PAdic(5, 0, 1, precision=2)


def test_digits_require_enough_precision():
    a = PAdic.from_int(2, 3, precision=2)
    assert a.digits(2) == 3
    with pytest.raises(PrecisionError):
        a.digits(4)


def test_mixed_primes_are_rejected():
    with pytest.raises(ValueError):
        PAdic.from_int(3, 1) + PAdic.from_int(5, 1)


def test_equality_up_to_shared_precision():
    assert PAdic(3, 0, 1 + 3**4, precision=4) == PAdic(3, 0, 1, precision=8)
    assert PAdic(3, 0, 2) != PAdic(3, 1, 2)


nonzero = st.integers(min_value=-(10**9), max_value=10**9).filter(bool)


@hypothesis_settings(deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), nonzero, nonzero)
def test_multiplication_is_multiplicative_on_integers(p, a, b):
    product = PAdic.from_int(p, a) * PAdic.from_int(p, b)
    assert product == PAdic.from_int(p, a * b)
    assert product.valuation == PAdic.from_int(p, a).valuation + PAdic.from_int(p, b).valuation


@hypothesis_settings(deadline=None)
@given(st.sampled_from([3, 5]), st.fractions().filter(bool), st.fractions().filter(bool))
def test_fraction_products(p, x, y):
    assert PAdic.from_fraction(p, x) * PAdic.from_fraction(p, y) == PAdic.from_fraction(p, x * y)


def test_unit_part():
    a = PAdic.from_fraction(5, Fraction(75, 2))
    assert a.unit_part() == Fraction(3, 2)
    assert a.unit_part().is_unit
    assert not a.is_unit
    with pytest.raises(ZeroDivisionError):
        PAdic.zero(5).unit_part()
