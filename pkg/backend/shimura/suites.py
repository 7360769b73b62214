from django.test import override_settings

from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from core.constants.arithmetic import SIGNS
from core.exceptions import VerificationError
from core.suites import SuiteResult, register_suite
from padic.numbers import PAdic
from padic.squares import least_nonresidue
from shimura.gamma import (
    expected_trivial_gamma,
    expected_two_adic_gamma,
    gamma_assemble,
    pole_scan,
)
from shimura.integrands import CLOSED, SHELLS, intertwine_section
from shimura.oracle import compare_with_closed
from shimura.params import SectionData, SSParams, alpha_representatives

BRUTE_FORCE_CASES = ((3, 2, 4), (5, 2, 4), (2, 2, 5))
POLE_PRIMES = (3, 5, 7)
TWISTING_PRIMES = (3, 5)
RANKS = (2, 3)
ZETA_ORDER = 8
A_SAMPLES = 4


def supported_characters(p, uniformizer_unit=1, zeta_exponents=(0, 3, 4)):
    """
    Ручные τ, покрытые замкнутыми формулами.

    Для нечетного p τ|𝔬^× тривиален или квадратичен, для p = 2 τ неразветвлен.
    """
    residues = (0,) if p == 2 else (0, (p - 1) // 2)
    return [
        TameCharacter.from_exponents(p, ZETA_ORDER, k, r, uniformizer_unit)
        for r in residues
        for k in zeta_exponents
    ]


def shell_test_points(p):
    """Значения c, покрывающие все случаи по первым цифрам."""
    if p == 2:
        return [0, 2, 6, -2, 4, 12, 8, 24, 16]
    return [0, p, 2 * p, (p - 1) * p, p * p, 3 * p * p, p**3]


def sampled_units(rng, p, count=A_SAMPLES):
    """a ∈ 1 + 𝔭, включая a = 1."""
    return [1] + [1 + p * rng.randrange(1, p**3) for _ in range(count - 1)]


@register_suite("closed_form")
def closed_form_suite(rng):
    result = SuiteResult("closed_form")
    for p, l, depth in BRUTE_FORCE_CASES:
        params = SSParams(p, l)
        characters = supported_characters(p, zeta_exponents=(1,))
        cases = [(characters[0], False)] + [(tau, True) for tau in characters]
        for tau, intertwined in cases:
            data = SectionData.build(params, tau)
            try:
                report = compare_with_closed(params, data, depth, intertwined)
            except VerificationError as error:
                result.expect(
                    False, p=p, l=l, tau=tau, intertwined=intertwined, **error.counterexample
                )
                continue
            result.expect(report.matched, p=p, l=l, tau=tau, intertwined=intertwined)
            result.details[f"p={p}, τ={tau}, intertwined={intertwined}"] = round(report.seconds, 1)
    return result


@register_suite("intertwining")
def intertwining_suite(rng):
    result = SuiteResult("intertwining")
    for p in (2, *POLE_PRIMES):
        params = SSParams(p, 2)
        exponents = range(ZETA_ORDER) if p == 2 else (0, 3, 4)
        characters = supported_characters(p, zeta_exponents=exponents)
        for tau in characters:
            data = SectionData.build(params, tau)
            for value in shell_test_points(p):
                c = PAdic.from_int(p, value)
                for unit in sampled_units(rng, p):
                    a = PAdic.from_int(p, unit)
                    closed = intertwine_section(data, c, a, CLOSED)
                    shells = intertwine_section(data, c, a, SHELLS)
                    result.expect(closed == shells, p=p, tau=tau, c=value, a=unit, law="M(τ, s)f_s")
    return result


@register_suite("pole")
def pole_suite(rng):
    result = SuiteResult("pole")
    for p in POLE_PRIMES:
        for alpha in alpha_representatives(p):
            poles = set()
            for omega in SIGNS:
                report = pole_scan(SSParams(p, 2, alpha, omega))
                poles.add(report.pole)
                result.expect(
                    report.pole.value_on_uniformizer**2 == 1, p=p, alpha=alpha, law="τ(ϖ)² = 1"
                )
                result.expect(report.zero is not None, p=p, alpha=alpha, law="zero slice")
                others = [row for row in report.candidates if row["tau"] != report.pole]
                result.expect(
                    all(row["canceled"] for row in others),
                    p=p,
                    alpha=alpha,
                    law="other poles canceled",
                )
            result.expect(len(poles) == 1, p=p, alpha=alpha, law="independent of ω")
    return result


@register_suite("trivial_gamma")
def trivial_gamma_suite(rng):
    result = SuiteResult("trivial_gamma")
    for p in POLE_PRIMES:
        for unit in (1, 2):
            for alpha in alpha_representatives(p):
                for omega in SIGNS:
                    for l in RANKS:
                        params = SSParams(p, l, alpha, omega, unit)
                        gamma = gamma_assemble(params, TameCharacter.trivial(p, unit))
                        result.expect(
                            gamma == expected_trivial_gamma(params),
                            p=p, l=l, alpha=alpha, omega=omega, u=unit, gamma=gamma,
                        )
    return result


@register_suite("q2")
def q2_suite(rng):
    result = SuiteResult("q2")
    for k in range(ZETA_ORDER):
        tau = TameCharacter.from_exponents(2, ZETA_ORDER, k, 0)
        for sign in SIGNS:
            for l in RANKS:
                gamma = gamma_assemble(SSParams(2, l), tau, AdditiveCharacter(2, sign))
                result.expect(
                    gamma == expected_two_adic_gamma(tau), tau=tau, sign=sign, l=l, gamma=gamma
                )
    result.details["tau_values"] = f"μ_{ZETA_ORDER}"
    return result


@register_suite("twisting")
def twisting_suite(rng):
    result = SuiteResult("twisting")
    for p in TWISTING_PRIMES:
        squares = [a for a in (4, 9, 16) if a % p]
        for l in RANKS:
            params = SSParams(p, l)
            psi = params.default_psi()
            for tau in supported_characters(p):
                gamma = gamma_assemble(params, tau, psi)
                for a in squares:
                    twisted = gamma_assemble(params, tau, psi.twisted(a))
                    factor = tau(PAdic.from_int(p, a)) ** (2 * l + 1)
                    result.expect(twisted == gamma * factor, p=p, l=l, tau=tau, a=a)
    return result


@register_suite("convention")
def convention_suite(rng):
    result = SuiteResult("convention")
    for p in POLE_PRIMES:
        for twist in (least_nonresidue(p), p - 1):
            for sign in SIGNS:
                psi = AdditiveCharacter(p, sign).twisted(twist)
                for alpha in alpha_representatives(p):
                    params = SSParams(p, 2, alpha)
                    gamma = gamma_assemble(params, TameCharacter.trivial(p), psi)
                    result.expect(
                        gamma == expected_trivial_gamma(params, psi),
                        p=p, psi=psi, alpha=alpha, law="trivial γ for ψ_u",
                    )
                    report = pole_scan(params, psi)
                    result.expect(report.pole.is_quadratic, p=p, psi=psi, alpha=alpha)
        params = SSParams(p, 2)
        tau = supported_characters(p)[-1]
        positive = gamma_assemble(params, tau)
        with override_settings(BETA_SIGN=-1):
            negative = gamma_assemble(params, tau)
        result.expect(positive == negative, p=p, tau=tau, law="β sign does not change γ")
    return result
