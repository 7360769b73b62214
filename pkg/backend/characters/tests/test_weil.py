import random

import pytest
from sympy import legendre_symbol

from characters.additive import AdditiveCharacter
from characters.gauss import gauss_sum, kernel_gauss_sum
from characters.suites import random_nonzero, two_adic_anchors
from characters.weil import _weil_index_of_class, beta, weil_factor, weil_index, weil_table
from core.exceptions import NonStabilizationError, UnsupportedCaseError
from padic.hilbert import hilbert
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 97])
def test_kernel_gauss_sum_square(p):
    g = kernel_gauss_sum(AdditiveCharacter(p).dual())
    assert g * g == legendre_symbol(-1, p) * p
    assert g.exact_abs() == Scalar.sqrt_q(p)


def test_trivial_gauss_sum():
    assert gauss_sum(AdditiveCharacter(7), 0) == -1


def test_quadratic_gauss_sum_over_f3():
    # ψ(1)·1 + ψ(2)·(−1) = ζ₃ − ζ₃²
    expected = Scalar.root_of_unity(3, 3, 1) - Scalar.root_of_unity(3, 3, 2)
    assert gauss_sum(AdditiveCharacter(3), 1) == expected


def test_quartic_gauss_sum_modulus():
    g = gauss_sum(AdditiveCharacter(13), 3)
    assert g * g.conj() == 13


def test_kernel_gauss_sum_needs_odd_p():
    with pytest.raises(UnsupportedCaseError):
        kernel_gauss_sum(AdditiveCharacter(2))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_weil_index_is_eighth_root(p):
    for rep in weil_table(AdditiveCharacter(p)):
        gamma = weil_index(AdditiveCharacter(p), rep)
        assert gamma**8 == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_unit_square_invariance(p):
    psi = AdditiveCharacter(p)
    a = PAdic.from_int(p, 3 if p != 3 else 2).shift(1)
    u = PAdic.from_int(p, 1 + 2 * p)
    assert weil_index(psi, a * u * u) == weil_index(psi, a)


@pytest.mark.parametrize("sign", [1, -1])
def test_two_adic_anchors(sign):
    assert all(two_adic_anchors(AdditiveCharacter(2, sign)).values())


def test_odd_weil_factor_on_units_is_legendre():
    psi = AdditiveCharacter(7, twist=3)
    for u in range(1, 7):
        assert weil_factor(psi, PAdic.from_int(7, u)) == legendre_symbol(u, 7)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_weil_factor_laws(p):
    rng = random.Random(p)
    psi = AdditiveCharacter(p)
    minus_one = PAdic.from_int(p, -1)
    for _ in range(60):
        a, b = random_nonzero(rng, p), random_nonzero(rng, p)
        gamma_a = weil_factor(psi, a)
        assert gamma_a * gamma_a == hilbert(minus_one, a)
        assert weil_factor(psi, a * b) == gamma_a * weil_factor(psi, b) * hilbert(a, b)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_beta_squared_is_weil_factor_at_minus_one(p):
    psi = AdditiveCharacter(p)
    assert beta(psi) ** 2 == weil_factor(psi, PAdic.from_int(p, -1))


def test_odd_weil_index_of_level_one_character():
    # γ(ψ) = G/|G| для квадратичной суммы Гаусса
    psi = AdditiveCharacter(5)
    g = gauss_sum(psi, 2)
    assert weil_index(psi) == g / g.exact_abs()


def test_non_stabilization_raises(settings):
    settings.WEIL_INDEX_MAX_DEPTH = 1
    _weil_index_of_class.cache_clear()
    try:
        with pytest.raises(NonStabilizationError):
            weil_index(AdditiveCharacter(11))
    finally:
        _weil_index_of_class.cache_clear()
