from core.constants.arithmetic import PARAMETER_RANKS, SIGNS
from core.suites import SuiteResult, register_suite
from langlands.extension import RamifiedExt
from langlands.parameter import (
    build_parameter,
    parameter_extension,
    pi1_uniformizer,
    principal_level,
    xi_principal_units,
)
from padic.hilbert import hilbert
from padic.numbers import PAdic
from padic.squares import class_representatives
from shimura.gamma import pole_scan
from shimura.params import SSParams, alpha_representatives

PARAMETER_PRIMES = (3, 5, 7)
UNIT_SAMPLES = 6
SAMPLE_DIGITS = 3


def sample_element(rng, ext, principal=False):
    """Случайный элемент 𝔬_E с коэффициентами по модулю p^SAMPLE_DIGITS."""
    p = ext.p
    bound = p**SAMPLE_DIGITS
    coeffs = [rng.randrange(bound) for _ in range(ext.degree)]
    if principal:
        coeffs[0] = 1 + p * rng.randrange(bound)
    elif not any(coeffs):
        coeffs[0] = 1
    return ext.element(coeffs)


def check_principal_units(result, rng, ext, psi, level):
    """Мультипликативность ξ и постоянство на смежных классах 1 + 𝔭_E^level."""
    for _ in range(UNIT_SAMPLES):
        x = sample_element(rng, ext, principal=True)
        y = sample_element(rng, ext, principal=True)
        xi_x = xi_principal_units(ext, x, psi)
        result.expect(
            xi_principal_units(ext, x * y, psi) == xi_x * xi_principal_units(ext, y, psi),
            ext=ext, x=x, y=y, law="ξ(xy) = ξ(x)ξ(y)",
        )
        shift = ext.one() + ext.power_of_zeta(level) * sample_element(rng, ext)
        result.expect(
            xi_principal_units(ext, x * shift, psi) == xi_x, ext=ext, x=x, law="level"
        )
        z = sample_element(rng, ext)
        result.expect(z.valuation == z.norm().valuation, ext=ext, z=z, law="v_E = v_F∘N")


@register_suite("parameter")
def parameter_suite(rng):
    result = SuiteResult("parameter")
    levels = {}
    for p in PARAMETER_PRIMES:
        uniformizer = PAdic.uniformizer(p)
        for l in PARAMETER_RANKS:
            pi1 = pi1_uniformizer(l, 1, uniformizer)
            result.expect(
                pi1 * ((-1) ** (l + 1) * 4) == uniformizer and pi1.valuation == 1,
                p=p, l=l, law="ϖ_{α,l}",
            )

        quadratic = RamifiedExt(2, uniformizer)
        det = quadratic.discriminant_character()
        for b in class_representatives(p):
            result.expect(det(b) == hilbert(uniformizer, b), p=p, b=b, law="degree 2 discriminant")
        for _ in range(UNIT_SAMPLES):
            x = sample_element(rng, quadratic)
            result.expect(det(x.norm()) == 1, p=p, x=x, law="norms lie in the kernel")

        for alpha in alpha_representatives(p):
            zeta_values = {}
            for omega in SIGNS:
                params = SSParams(p, 2, alpha, omega)
                record = build_parameter(params)
                result.expect(record.tau_alpha.is_quadratic, params=params)
                pole = pole_scan(params).pole
                result.expect(record.tau_alpha == pole, params=params, law="τ_α = pole")
                unimodular = record.xi_on_zeta.value.is_unimodular()
                result.expect(unimodular, params=params, law="|ξ(ζ)| = 1")
                result.expect(record.readings_agree, params=params, law="δ readings")
                zeta_values[omega] = record
            positive, negative = zeta_values[1], zeta_values[-1]
            result.expect(
                positive.tau_alpha == negative.tau_alpha, p=p, alpha=alpha, law="τ_α without ω"
            )
            result.expect(
                positive.xi_on_zeta.value == -negative.xi_on_zeta.value
                and positive.xi_residue_exponent == negative.xi_residue_exponent,
                p=p, alpha=alpha, law="ω flips ξ(ζ)",
            )

        for l in PARAMETER_RANKS:
            ext = parameter_extension(SSParams(p, l))
            det = ext.discriminant_character()
            result.expect((det**2).is_trivial, p=p, l=l, law="det(Ind 1)² = 1")
            result.expect(ext.zeta().valuation == 1, p=p, l=l)
            result.expect(ext.from_base(p).valuation == 2 * l, p=p, l=l)
            if l % p:
                level = principal_level(ext)
                levels[f"{p},{l}"] = level
                check_principal_units(result, rng, ext, SSParams(p, l).default_psi(), level)
    result.details["principal_levels"] = levels
    return result
