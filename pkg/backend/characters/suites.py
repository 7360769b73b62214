from fractions import Fraction

from sympy import primerange

from characters.additive import AdditiveCharacter
from characters.gauss import gauss_sum, kernel_gauss_sum
from characters.weil import weil_factor, weil_index
from core.suites import SuiteResult, register_suite
from padic.hilbert import hilbert
from padic.numbers import PAdic
from padic.squares import legendre
from scalars.cyclotomic import Scalar

GAUSS_PRIME_BOUND = 100
WEIL_PRIMES = (2, 3, 5, 7)
WEIL_PAIRS = 500


def random_nonzero(rng, p, spread=3):
    unit = rng.randrange(1, p**6)
    while unit % p == 0:
        unit = rng.randrange(1, p**6)
    return PAdic.from_int(p, unit).shift(rng.randint(-spread, spread))


def two_adic_anchors(psi):
    """γ_ψ(2) = 1, γ_ψ(−1) = ψ(−1/2) и ψ(−1/2)·γ(ψ)·(1 + ψ(1/2)) = √2."""
    half = psi.at_fraction(Fraction(1, 2))
    minus_half = psi.at_fraction(Fraction(-1, 2))
    return {
        "gamma_psi(2)": weil_factor(psi, PAdic.from_int(2, 2)) == 1,
        "gamma_psi(-1)": weil_factor(psi, PAdic.from_int(2, -1)) == minus_half,
        "sqrt2": minus_half * weil_index(psi) * (1 + half) == Scalar.sqrt_q(2),
    }


@register_suite("gauss")
def gauss_suite(rng):
    result = SuiteResult("gauss")
    primes = list(primerange(3, GAUSS_PRIME_BOUND))
    for p in primes:
        psi = AdditiveCharacter(p)
        quadratic = gauss_sum(psi, (p - 1) // 2)
        kernel = kernel_gauss_sum(psi.dual())
        sign = hilbert(PAdic.from_int(p, -1), PAdic.uniformizer(p))
        result.expect(kernel * kernel == sign * p, p=p, law="G^2 = (-1, ϖ)q")
        result.expect(quadratic * quadratic.conj() == p, p=p, law="|G|^2 = q")
        result.expect(gauss_sum(psi, 0) == -1, p=p, law="trivial η")
    result.details["primes"] = primes
    return result


@register_suite("weil")
def weil_suite(rng):
    result = SuiteResult("weil")
    for p in WEIL_PRIMES:
        for sign in (1, -1):
            psi = AdditiveCharacter(p, sign)
            minus_one = PAdic.from_int(p, -1)
            for _ in range(WEIL_PAIRS):
                a, b = random_nonzero(rng, p), random_nonzero(rng, p)
                gamma_a = weil_factor(psi, a)
                result.expect(
                    gamma_a * gamma_a == hilbert(minus_one, a), p=p, a=a, law="γ_ψ(a)² = (−1, a)"
                )
                result.expect(
                    weil_factor(psi, a * b) == gamma_a * weil_factor(psi, b) * hilbert(a, b),
                    p=p, a=a, b=b, law="γ_ψ(ab) = γ_ψ(a)γ_ψ(b)(a, b)",
                )
            if p == 2:
                for law, holds in two_adic_anchors(psi).items():
                    result.expect(holds, p=p, sign=sign, law=law)
                continue
            for u in range(1, p):
                result.expect(
                    weil_factor(psi, PAdic.from_int(p, u)) == legendre(u, p),
                    p=p, u=u, law="γ_ψ|𝔬^× is the Legendre character",
                )
    result.details["pairs_per_prime"] = WEIL_PAIRS
    return result
