from fractions import Fraction

from characters.additive import AdditiveCharacter
from core.suites import SuiteResult, register_suite
from metaplectic.cocycle import MpElement
from metaplectic.matrices import SL2
from weilrep.action import act, check_beta, lower_borel_closed
from weilrep.fourier import fourier
from weilrep.schwartz import SchwartzFn

WEILREP_PRIMES = (2, 3, 5)
GENUINE_PAIRS = 1_000
BOREL_SAMPLES = 50


def letters(p):
    """Короткие образующие, на которых сетки остаются маленькими."""
    return [
        SL2.upper(p, 1),
        SL2.upper(p, -1),
        SL2.upper(p, Fraction(1, p)),
        SL2.diagonal(p, 1 + p),
        SL2.diagonal(p, p),
        SL2.weyl(p),
        SL2.lower(p, p),
    ]


def small_element(rng, p, length=2):
    alphabet = letters(p)
    g = SL2.identity(p)
    for _ in range(length):
        g = g @ rng.choice(alphabet)
    return MpElement(g, rng.choice((1, -1)))


def probe_functions(p):
    return [
        SchwartzFn.indicator(p, 0),
        SchwartzFn.indicator(p, 1).translated(1),
        SchwartzFn.indicator(p, -1) + SchwartzFn.indicator(p, 1) * 2,
    ]


@register_suite("weilrep")
def weilrep_suite(rng):
    result = SuiteResult("weilrep")
    for p in WEILREP_PRIMES:
        for sign in (1, -1):
            psi = AdditiveCharacter(p, sign)
            result.expect(check_beta(psi), p=p, sign=sign, law="β_ψ² = γ_ψ(−1)")
            for phi in probe_functions(p):
                result.expect(
                    fourier(fourier(phi, psi), psi) == phi.reflected(),
                    p=p, sign=sign, phi=phi, law="φ̂̂(y) = φ(−y)",
                )
        psi = AdditiveCharacter(p)
        functions = probe_functions(p)
        for _ in range(GENUINE_PAIRS):
            x, y = small_element(rng, p), small_element(rng, p)
            phi = rng.choice(functions)
            result.expect(
                act(x, act(y, phi, psi), psi) == act(x * y, phi, psi),
                p=p, x=x, y=y, phi=phi, law="ω(x)ω(y) = ω(xy)",
            )
        for _ in range(BOREL_SAMPLES):
            a = rng.choice((1, -1, 1 + p, Fraction(1, 1 + p), p))
            c = rng.choice((p, -p, p * p, 1))
            phi = rng.choice(functions)
            closed = lower_borel_closed(phi, psi, a, c)
            result.expect(
                closed == act(SL2.lower_borel(p, a, c), phi, psi),
                p=p, a=a, c=c, phi=phi, law="ω(b) closed form",
            )
    result.details["pairs_per_prime"] = GENUINE_PAIRS
    return result
