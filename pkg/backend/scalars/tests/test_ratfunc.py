import random

import pytest

from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc


def s_one_point(q):
    """X₀ = q^{−1}, то есть s = 1."""
    return Scalar.rational(q, 1) / q


def random_ratfunc(rng, q):
    def poly():
        return {
            k: Scalar.root_of_unity(q, 8, rng.randrange(8)) * rng.randint(1, 3)
            for k in range(rng.randint(1, 3))
        }

    return RatFunc(q, poly(), poly())


def test_simple_pole_at_s_equal_one():
    q = 3
    f = RatFunc.euler_factor(Scalar.rational(q, q))
    assert f.order_at(s_one_point(q)) == -1


def test_reflected_zeta_factor_has_pole():
    q = 5
    f = RatFunc.euler_factor(Scalar.q_power(q, -4), exponent=-2)
    assert f.order_at(s_one_point(q)) == -1


def test_constant_has_order_zero():
    assert RatFunc.constant(7, 3).order_at(Scalar.root_of_unity(7, 8, 1)) == 0


def test_order_is_additive():
    q = 3
    x0 = s_one_point(q)
    one = Scalar.one(q)
    linear = RatFunc(q, {0: one, 1: Scalar.rational(q, -q)})
    f = linear.inverse()
    g = linear**2 * RatFunc.x(q)
    assert (f * g).order_at(x0) == f.order_at(x0) + g.order_at(x0) == 1
    assert f.inverse().order_at(x0) == -f.order_at(x0)


def test_substitution_for_shifted_argument():
    q = 5
    t = Scalar.root_of_unity(q, 4, 1)
    assert RatFunc.euler_factor(t).substitute(2, -1) == RatFunc.euler_factor(t * q, 2)


def test_common_factor_is_removed():
    q = 3
    one = Scalar.one(q)
    f = RatFunc(q, {0: -one, 2: one}, {0: -one, 1: one})
    assert f == RatFunc(q, {0: one, 1: one})
    assert f.denominator == {0: one}


@pytest.mark.parametrize("q", [2, 3, 5])
def test_canonical_form_is_idempotent(q):
    rng = random.Random(q)
    for _ in range(10):
        f = random_ratfunc(rng, q)
        assert RatFunc(q, f.numerator, f.denominator) == f
        assert f.denominator[0] == 1


def test_field_operations():
    q = 3
    rng = random.Random(11)
    f, g = random_ratfunc(rng, q), random_ratfunc(rng, q)
    assert (f + g) - g == f
    assert (f * g) / g == f
    assert f - f == RatFunc.constant(q, 0)


def test_monomial_detection():
    q = 7
    coeff = Scalar.sqrt_q(q)
    assert RatFunc.q_power_s(q, 1, -1).as_monomial() == (coeff.inverse(), -1)
    assert RatFunc.euler_factor(Scalar.one(q)).as_monomial() is None


def test_division_by_zero_function():
    with pytest.raises(ZeroDivisionError):
        RatFunc.one(3) / RatFunc.constant(3, 0)


def test_leading_coefficient_at_pole():
    q = 3
    one = Scalar.one(q)
    f = RatFunc(q, {0: one}, {0: one, 1: -q * one})
    # 1/(1 − qX) = −q^{−1}/(X − q^{−1})
    assert f.leading_coefficient_at(s_one_point(q)) == Scalar.rational(q, -1) / q


def test_json_form_is_lossless():
    f = random_ratfunc(random.Random(3), 3)
    assert RatFunc.from_json(f.to_json()) == f
