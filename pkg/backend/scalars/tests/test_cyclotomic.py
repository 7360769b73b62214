import random
from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st

from scalars.cyclotomic import Scalar


def random_scalar(rng, q):
    n = 8 * q
    phases = {Fraction(rng.randrange(n), n): rng.randint(-3, 3) for _ in range(4)}
    return Scalar.from_phases(q, phases) + Scalar.sqrt_q(q) * rng.randint(-2, 2)


def test_eighth_root_squared_is_fourth_root():
    assert Scalar.root_of_unity(3, 8, 1) ** 2 == Scalar.root_of_unity(3, 4, 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13])
def test_complete_root_sum_vanishes(p):
    total = Scalar.sum(p, [Scalar.root_of_unity(p, p, k) for k in range(p)])
    assert total.is_zero


def test_conjugation_inverts_roots():
    z = Scalar.root_of_unity(5, 40, 7)
    assert z.conj() == Scalar.root_of_unity(5, 40, 33)
    assert z.conj().conj() == z


@pytest.mark.parametrize("q", [2, 3, 5, 7, 11])
def test_formal_sqrt_matches_cyclotomic_value(q):
    root = Scalar.sqrt_q(q)
    assert root * root == q
    assert root.specialized() == root
    assert root.exact_abs() == root


def test_inverse_of_cyclotomic_element():
    z = 1 + Scalar.root_of_unity(5, 5, 1)
    assert z * z.inverse() == 1


def test_inverse_through_sqrt_conjugate():
    z = 1 + Scalar.sqrt_q(5)
    assert z.inverse() == (1 - Scalar.sqrt_q(5)) / Scalar.rational(5, -4)
    assert z / z == 1


def test_zero_inversion_raises():
    with pytest.raises(ZeroDivisionError):
        Scalar.zero(3).inverse()


def test_mixed_q_rejected():
    with pytest.raises(ValueError):
        Scalar.one(3) + Scalar.one(5)


def test_gauss_sum_absolute_value():
    q = 7
    phases = {Fraction(x, q): (1 if x in (1, 2, 4) else -1) for x in range(1, q)}
    gauss = Scalar.from_phases(q, phases)
    assert gauss.exact_abs() == Scalar.sqrt_q(q)
    assert gauss.abs_squared() == q


@pytest.mark.parametrize("q", [2, 3, 5])
def test_exact_square_modulus_matches_float(q):
    rng = random.Random(20240917 + q)
    for _ in range(20):
        z = random_scalar(rng, q)
        exact = z.abs_squared().embed_float()
        assert abs(exact.imag) < 1e-9
        assert abs(exact.real - abs(z.embed_float()) ** 2) < 1e-9 * max(1.0, exact.real)


def test_root_of_unity_exponent():
    z = Scalar.root_of_unity(2, 8, 3)
    assert z.root_of_unity_exponent(8) == 3
    assert z.is_unimodular()
    assert (z * 2).root_of_unity_exponent(8) is None


def test_json_form_is_lossless():
    rng = random.Random(7)
    z = random_scalar(rng, 3)
    assert Scalar.from_json(z.to_json()) == z


def test_rendering_uses_integer_coefficients():
    assert str(Scalar.root_of_unity(3, 4, 1) * 2) == "2·ζ_8^2"
    assert str(Scalar.zero(3)) == "0"


@hypothesis_settings(deadline=None)
@given(
    st.sampled_from([(3, 4), (3, 9), (5, 8), (5, 40), (7, 56)]),
    st.integers(min_value=-1000, max_value=1000),
    st.integers(min_value=-1000, max_value=1000),
)
def test_roots_of_unity_multiply(order, a, b):
    q, n = order
    product = Scalar.root_of_unity(q, n, a) * Scalar.root_of_unity(q, n, b)
    assert product == Scalar.root_of_unity(q, n, a + b)
    assert product.is_unimodular()


@hypothesis_settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5]), st.integers(min_value=0, max_value=10**6))
def test_distributivity(q, seed):
    rng = random.Random(seed)
    x, y, z = (random_scalar(rng, q) for _ in range(3))
    assert x * (y + z) == x * y + x * z
    assert (x * y).conj() == x.conj() * y.conj()
