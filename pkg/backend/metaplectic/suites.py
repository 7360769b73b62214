from fractions import Fraction

from core.suites import SuiteResult, register_suite
from metaplectic.cocycle import (
    MpElement,
    cocycle,
    lift,
    mp_mul,
    neighbourhood_generators,
    neighbourhood_size,
    splitting_check,
)
from metaplectic.matrices import SL2
from padic.hilbert import hilbert
from padic.numbers import PAdic

COCYCLE_PRIMES = (2, 3, 5, 7)
COCYCLE_TRIPLES = 10_000
SIGN_SAMPLES = 500
SPLITTING_CASES = ((2, 5), (3, 5), (5, 4))
SPLITTING_TARGET_DEPTH = 5
THETA_SAMPLES = 1_000


def random_rational(rng, p, spread=2, zero_chance=0.0):
    """Случайное рациональное u·p^k с единицей u по модулю p⁴."""
    if zero_chance and rng.random() < zero_chance:
        return Fraction(0)
    unit = rng.randrange(1, p**4)
    while unit % p == 0:
        unit = rng.randrange(1, p**4)
    sign = rng.choice((1, -1))
    return sign * Fraction(unit) * Fraction(p) ** rng.randint(-spread, spread)


def random_element(rng, p):
    """Случайный элемент SL₂(ℚ_p) в виде n(x)·m(a)·[w₁]·n̄(y)."""
    g = SL2.upper(p, random_rational(rng, p, zero_chance=0.2))
    g = g @ SL2.diagonal(p, random_rational(rng, p))
    if rng.random() < 0.5:
        g = g @ SL2.weyl(p)
    return g @ SL2.lower(p, random_rational(rng, p, zero_chance=0.2))


def padic(p, value):
    return PAdic.from_fraction(p, value)


def decomposition_sign_holds(p, a, c):
    """⟨b, 1⟩ = (a^{−1}, c)·⟨m(a), 1⟩⟨n̄(c), 1⟩."""
    product = mp_mul(lift(SL2.diagonal(p, a)), lift(SL2.lower(p, c)))
    sign = hilbert(padic(p, 1 / a), padic(p, c))
    return mp_mul(MpElement(SL2.identity(p), sign), product) == lift(SL2.lower_borel(p, a, c))


def minus_identity_weyl_holds(p):
    """⟨−I·w₁, 1⟩ = (−1, −1)·⟨−I, 1⟩⟨w₁, 1⟩."""
    minus_one = padic(p, -1)
    product = mp_mul(lift(SL2.minus_identity(p)), lift(SL2.weyl(p)))
    return product == MpElement(-SL2.weyl(p), hilbert(minus_one, minus_one))


def weyl_conjugation_holds(p, c):
    """⟨w₁, 1⟩⟨n(−c), 1⟩⟨w₁^{−1}, 1⟩ = ⟨n̄(c), 1⟩."""
    w = SL2.weyl(p)
    product = mp_mul(mp_mul(lift(w), lift(SL2.upper(p, -c))), lift(w.inverse()))
    return product == lift(SL2.lower(p, c))


def intertwining_sign(p, a, c, u):
    """Знак ⟨w₁^{−1}, 1⟩⟨n(u), 1⟩⟨b, 1⟩ при b = (a, 0; a^{−1}c, a^{−1})."""
    w_inverse = lift(SL2.weyl(p).inverse())
    product = mp_mul(mp_mul(w_inverse, lift(SL2.upper(p, u))), lift(SL2.lower_borel(p, a, c)))
    return product.eps


def expected_intertwining_sign(p, a, c, u):
    """(−ac, a + ua^{−1}c), либо (ua, uc) при a + ua^{−1}c = 0."""
    corner = a + u * c / a
    if corner == 0:
        return hilbert(padic(p, u * a), padic(p, u * c))
    return hilbert(padic(p, -a * c), padic(p, corner))


def row_reduction_identity_holds(p, a, c, u):
    """(−ac, a + ua^{−1}c)(ua^{−1}, a²u^{−1} + c) = (−uc, a)(ua^{−1}, −1)."""
    left = hilbert(padic(p, -a * c), padic(p, a + u * c / a)) * hilbert(
        padic(p, u / a), padic(p, a * a / u + c)
    )
    right = hilbert(padic(p, -u * c), padic(p, a)) * hilbert(padic(p, u / a), padic(p, -1))
    return left == right


def admissible_triple(rng, p):
    """Случайные (a, c, u) с ненулевыми a, c, u и a² + uc ≠ 0."""
    while True:
        a, c, u = (random_rational(rng, p) for _ in range(3))
        if a * a + u * c != 0:
            return a, c, u


@register_suite("cocycle")
def cocycle_suite(rng):
    result = SuiteResult("cocycle")
    for p in COCYCLE_PRIMES:
        for _ in range(COCYCLE_TRIPLES):
            g, h, k = (random_element(rng, p) for _ in range(3))
            result.expect(
                cocycle(g, h) * cocycle(g @ h, k) == cocycle(g, h @ k) * cocycle(h, k),
                p=p, g=g, h=h, k=k, law="σ(g,h)σ(gh,k) = σ(g,hk)σ(h,k)",
            )
        result.expect(cocycle(SL2.weyl(p), SL2.weyl(p)) == 1, p=p, law="σ(w₁, w₁) = 1")
        result.expect(minus_identity_weyl_holds(p), p=p, law="⟨−I·w₁⟩ sign")
        for _ in range(SIGN_SAMPLES):
            a, c, u = admissible_triple(rng, p)
            result.expect(decomposition_sign_holds(p, a, c), p=p, a=a, c=c, law="⟨b⟩ sign")
            result.expect(weyl_conjugation_holds(p, c), p=p, c=c, law="w₁ n(−c) w₁^{−1}")
            result.expect(
                intertwining_sign(p, a, c, u) == expected_intertwining_sign(p, a, c, u),
                p=p, a=a, c=c, u=u, law="⟨w₁^{−1}⟩⟨n(u)⟩⟨b⟩ sign",
            )
            result.expect(
                row_reduction_identity_holds(p, a, c, u), p=p, a=a, c=c, u=u,
                law="(−ac, a+ua^{−1}c)(ua^{−1}, a²u^{−1}+c) = (−uc,a)(ua^{−1},−1)",
            )
    result.details["triples_per_prime"] = COCYCLE_TRIPLES
    return result


def depth_limit_note(p, depth):
    """Почему p проверяется на глубине меньше SPLITTING_TARGET_DEPTH; None, если не меньше."""
    if depth >= SPLITTING_TARGET_DEPTH:
        return None
    evaluations = len(neighbourhood_generators(p)) * neighbourhood_size(p, SPLITTING_TARGET_DEPTH)
    return (
        f"p={p}: глубина {depth}; на глубине {SPLITTING_TARGET_DEPTH} даже режим образующих "
        f"требует {evaluations} вычислений σ"
    )


@register_suite("splitting")
def splitting_suite(rng):
    result = SuiteResult("splitting")
    reports, limits = [], []
    for p, depth in SPLITTING_CASES:
        report = splitting_check(p, depth, rng=rng, theta_samples=THETA_SAMPLES)
        result.expect(report.passed, p=p, depth=depth, **(report.counterexample or {}))
        reports.append(report.as_dict())
        note = depth_limit_note(p, depth)
        if note:
            limits.append(note)
    result.details["reports"] = reports
    result.details["depth_limits"] = limits
    return result
