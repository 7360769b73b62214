import random
from fractions import Fraction

import pytest

from characters.additive import AdditiveCharacter
from characters.weil import weil_factor
from metaplectic.cocycle import MpElement
from metaplectic.matrices import SL2
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from weilrep.action import (
    act,
    check_beta,
    factorize,
    lower_borel_closed,
    modulate,
    translate,
    word_sign,
)
from weilrep.fourier import fourier, self_dual_volume
from weilrep.schwartz import SchwartzFn
from weilrep.suites import probe_functions, small_element


def test_indicator_evaluation():
    phi = SchwartzFn.indicator(3, 1)
    assert phi(Fraction(3)) == 1
    assert phi(Fraction(9, 2)) == 1
    assert phi(1) == 0
    assert phi(Fraction(1, 3)) == 0


def test_refinement_keeps_function():
    phi = SchwartzFn.indicator(5, 0)
    fine = phi.refine(2, 3)
    assert fine.size == 5**5
    assert fine == phi
    assert fine(Fraction(7, 25)) == 0
    assert fine(Fraction(7, 2)) == 1


def test_refine_cannot_coarsen():
    with pytest.raises(ValueError):
        SchwartzFn.indicator(3, 0).refine(-1, 0)


def test_grid_must_be_nonempty():
    with pytest.raises(ValueError):
        SchwartzFn(3, -2, 1, ())


def test_odd_fourier_of_integers():
    # 1_𝔬 ↦ q^{1/2}·1_𝔭: двойственная решетка к 𝔬 при спаривании ψ(2xy)
    p = 5
    phi_hat = fourier(SchwartzFn.indicator(p, 0), AdditiveCharacter(p))
    assert phi_hat == SchwartzFn.indicator(p, 1) * Scalar.sqrt_q(p)


def test_two_adic_integers_are_self_dual():
    phi = SchwartzFn.indicator(2, 0)
    assert fourier(phi, AdditiveCharacter(2)) == phi


def test_self_dual_volume():
    assert self_dual_volume(3, 0) == Scalar.sqrt_q(3)
    assert self_dual_volume(2, 0) == 1
    assert self_dual_volume(2, 1) == Scalar.rational(2, Fraction(1, 2))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("sign", [1, -1])
def test_fourier_inversion(p, sign):
    psi = AdditiveCharacter(p, sign)
    for phi in probe_functions(p):
        assert fourier(fourier(phi, psi), psi) == phi.reflected()


def test_deep_coset_transforms_to_character():
    # φ = 1_{1+𝔭²}: φ̂(y) = vol(𝔭²)·ψ(2y) на 𝔭^{−1}
    p = 3
    psi = AdditiveCharacter(p)
    phi = SchwartzFn.indicator(p, 2).translated(-1)
    phi_hat = fourier(phi, psi)
    y = Fraction(1, 3)
    assert phi_hat(y) == psi.at_fraction(2 * y) * self_dual_volume(p, 2)
    assert phi_hat(Fraction(1, 9)) == 0


def test_heisenberg_operations():
    p = 3
    psi = AdditiveCharacter(p)
    phi = SchwartzFn.indicator(p, 1)
    shifted = translate(phi, psi, 1, z=Fraction(1, 3))
    assert shifted(Fraction(-1)) == psi.at_fraction(Fraction(1, 3))
    assert shifted(0) == 0
    waved = modulate(SchwartzFn.indicator(p, 0), psi, Fraction(1, 3))
    assert waved(1) == psi.at_fraction(Fraction(2, 3))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_minus_identity_acts_by_reflection(p):
    psi = AdditiveCharacter(p)
    phi = SchwartzFn.indicator(p, 1).translated(1)
    expected = phi.reflected() * weil_factor(psi, PAdic.from_int(p, -1)).inverse()
    assert act(SL2.minus_identity(p), phi, psi) == expected


def test_diagonal_action_scales():
    p = 3
    psi = AdditiveCharacter(p)
    result = act(SL2.diagonal(p, p), SchwartzFn.indicator(p, 0), psi)
    expected = SchwartzFn.indicator(p, -1) * (
        weil_factor(psi, PAdic.from_int(p, p)).inverse() * Scalar.q_power(p, -1)
    )
    assert result == expected


def test_factorizations_multiply_back():
    p = 5
    for g in (
        SL2.upper(p, 3) @ SL2.diagonal(p, 2),
        SL2.lower_borel(p, 2, 5),
        SL2(p, 5, 1, -1, 0),
        SL2(p, 0, 1, -1, 7),
    ):
        word_sign(g, factorize(g))


@pytest.mark.parametrize("p", [2, 3])
def test_genuine_action(p):
    rng = random.Random(p)
    psi = AdditiveCharacter(p)
    functions = probe_functions(p)
    for _ in range(8):
        x, y = small_element(rng, p), small_element(rng, p)
        phi = rng.choice(functions)
        assert act(x, act(y, phi, psi), psi) == act(x * y, phi, psi)


def test_eps_flips_the_action():
    p = 3
    psi = AdditiveCharacter(p)
    phi = SchwartzFn.indicator(p, 0)
    g = SL2.upper(p, 1) @ SL2.weyl(p)
    assert act(MpElement(g, -1), phi, psi) == -act(g, phi, psi)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("a, c", [(1, 1), (-1, 3), (Fraction(1, 4), 9), (2, Fraction(1, 2))])
def test_lower_borel_closed_form(p, a, c):
    if PAdic.from_fraction(p, a).valuation != 0 and p == 2:
        a = 3
    psi = AdditiveCharacter(p)
    phi = SchwartzFn.indicator(p, 1).translated(1)
    assert lower_borel_closed(phi, psi, a, c) == act(SL2.lower_borel(p, a, c), phi, psi)


def test_closed_form_needs_nonzero_c():
    with pytest.raises(ValueError):
        lower_borel_closed(SchwartzFn.indicator(3, 0), AdditiveCharacter(3), 1, 0)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_check_beta(p):
    assert check_beta(AdditiveCharacter(p))
    assert check_beta(AdditiveCharacter(p, -1))


def test_lower_unipotent_action_logs_sign(caplog):
    p = 3
    psi = AdditiveCharacter(p)
    phi = SchwartzFn.indicator(p, 1)
    g = SL2.lower(p, Fraction(3))
    assert type(word_sign(g, factorize(g))) is int
    with caplog.at_level("DEBUG", logger="weilrep.action"):
        result = act(g, phi, psi)
    assert result == lower_borel_closed(phi, psi, 1, 3)
    assert "знак" in caplog.text
