import pytest

from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc
from tate.factors import (
    epsilon_factor,
    l_factor,
    local_coefficient,
    reflect,
    shifted_gamma,
    tate_gamma,
    twist_gamma,
)
from tate.suites import tame_characters, two_adic_epsilon_chain


def s_one(q):
    return Scalar.one(q) / q


def test_l_factor_of_trivial_character():
    assert l_factor(TameCharacter.trivial(3)) == RatFunc.euler_factor(Scalar.one(3))


def test_l_factor_at_one_for_trivial_square():
    q = 5
    value = l_factor(TameCharacter.trivial(q)).evaluate(s_one(q))
    assert value == Scalar.rational(q, q) / (q - 1)


def test_ramified_l_factor_is_one():
    assert l_factor(TameCharacter(5, Scalar.one(5), 2)) == 1


@pytest.mark.parametrize("p", [2, 3, 5])
def test_functional_equation(p):
    for tau in tame_characters(p):
        psi = AdditiveCharacter(p, -1)
        gamma = tate_gamma(tau, psi)
        assert gamma * reflect(tate_gamma(tau.inverse(), psi.dual())) == 1


def test_trivial_epsilon_anchor():
    eps = epsilon_factor(TameCharacter.trivial(7), AdditiveCharacter(7, twist=3))
    assert eps.substitute(2, -1) == RatFunc.q_power_s(7, 2, -3)


def test_quadratic_shifted_gamma_has_pole():
    tau = TameCharacter.unramified(3, Scalar.rational(3, -1))
    assert shifted_gamma(tau, AdditiveCharacter(3)).order_at(s_one(3)) == -1


def test_unit_twist_multiplies_by_character_value():
    tau = TameCharacter(5, Scalar.one(5), 2)
    f = tate_gamma(tau, AdditiveCharacter(5))
    assert twist_gamma(f, tau, PAdic.from_int(5, 2)) == f * -1


def test_two_adic_twist_by_two():
    t = Scalar.root_of_unity(2, 8, 1)
    tau = TameCharacter.unramified(2, t)
    f = tate_gamma(tau, AdditiveCharacter(2))
    expected = RatFunc.monomial(t * Scalar.q_power(2, 1), 1) * f
    assert twist_gamma(f, tau, PAdic.from_int(2, 2)) == expected


def test_twist_by_uniformizer_square():
    tau = TameCharacter.trivial(3)
    f = RatFunc.one(3)
    assert twist_gamma(f, tau, PAdic.uniformizer(3) ** 2) == RatFunc.monomial(
        Scalar.rational(3, 3), 2
    )


def test_twist_by_zero_is_rejected():
    with pytest.raises(ZeroDivisionError):
        twist_gamma(RatFunc.one(3), TameCharacter.trivial(3), PAdic.zero(3))


@pytest.mark.parametrize("k", range(8))
def test_two_adic_epsilon_chain(k):
    assert two_adic_epsilon_chain(Scalar.root_of_unity(2, 8, k)) == Scalar.sqrt_q(2)


def test_local_coefficient_pole_for_quadratic_characters():
    p = 5
    for tau in TameCharacter.quadratic_characters(p):
        if tau.is_trivial:
            continue
        assert local_coefficient(tau, AdditiveCharacter(p)).order_at(s_one(p)) == -1


def test_local_coefficient_regular_for_non_quadratic_unramified():
    tau = TameCharacter.unramified(3, Scalar.root_of_unity(3, 8, 1))
    assert local_coefficient(tau, AdditiveCharacter(3)).order_at(s_one(3)) == 0
