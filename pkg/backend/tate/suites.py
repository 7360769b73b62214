from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from core.exceptions import UnsupportedCaseError
from core.suites import SuiteResult, register_suite
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc
from tate.factors import epsilon_factor, reflect, tate_gamma

TATE_PRIMES = (2, 3, 5)
ZETA_ORDER = 8


def tame_characters(p, uniformizer_unit=1):
    """Все ручные τ с τ(ϖ) ∈ μ₈ и показателем на κ^× порядка степени двойки."""
    characters = []
    for r in range(p - 1):
        for k in range(ZETA_ORDER):
            try:
                characters.append(
                    TameCharacter.from_exponents(p, ZETA_ORDER, k, r, uniformizer_unit)
                )
            except UnsupportedCaseError:
                continue
    return characters


def two_adic_epsilon_chain(t):
    """
    ε(2s − 1, τ², ψ)·(1 − t·2^{1−2s})/(1 − t^{−1}2^{2s−2})
    × (−1 + t·2^{2−2s})/(1 − t·2^{1−2s}) для t = τ²(2); равно 2^{1/2}.
    """
    one = Scalar.one(2)
    psi = AdditiveCharacter(2)
    square = TameCharacter.unramified(2, t)
    epsilon = epsilon_factor(square, psi).substitute(2, -1)
    first = RatFunc(2, {0: one, 2: t * -2}, {0: one, -2: t.inverse() / -4})
    second = RatFunc(2, {0: -one, 2: t * 4}, {0: one, 2: t * -2})
    return epsilon * first * second


@register_suite("tate")
def tate_suite(rng):
    result = SuiteResult("tate")
    half = {p: Scalar.q_power(p, -1) for p in TATE_PRIMES}
    for p in TATE_PRIMES:
        for tau in tame_characters(p):
            for sign in (1, -1):
                psi = AdditiveCharacter(p, sign)
                gamma = tate_gamma(tau, psi)
                dual = reflect(tate_gamma(tau.inverse(), psi.dual()))
                result.expect(gamma * dual == 1, p=p, tau=tau, sign=sign, law="functional equation")
                epsilon = epsilon_factor(tau, psi).evaluate(half[p])
                result.expect(epsilon.abs_squared() == 1, p=p, tau=tau, law="|ε(1/2)| = 1")
        trivial = TameCharacter.trivial(p)
        anchor = epsilon_factor(trivial, AdditiveCharacter(p)).substitute(2, -1)
        result.expect(
            anchor == RatFunc.q_power_s(p, 2, -3), p=p, law="ε(2s − 1, 1, ψ) = q^{2s−3/2}"
        )
    for k in range(ZETA_ORDER):
        t = Scalar.root_of_unity(2, ZETA_ORDER, k)
        result.expect(
            two_adic_epsilon_chain(t) == Scalar.sqrt_q(2), t=t, law="ℚ₂ ε-chain = √2"
        )
    return result
