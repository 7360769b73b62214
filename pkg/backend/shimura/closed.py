"""
Замкнутые формулы для Ψ(W, φ, f_s) и Ψ(W, φ, M(τ, s)f_s).

φ — характеристическая функция 𝔭 для нечетного p и 𝔬 для p = 2.
"""

import logging
from fractions import Fraction

from characters.gauss import kernel_gauss_sum
from characters.weil import beta, weil_factor, weil_index
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc
from shimura.integrands import KERNEL_CASE, a_factor, shifted_l_minus_one, unit_case
from shimura.measures import multiplicative_volume, volume

logger = logging.getLogger(__name__)


def plain_constant(params, data):
    """Ψ(W, φ, f_s): константа, не зависящая от s."""
    p, l = params.p, params.l
    psi = data.psi
    minus_one = PAdic.from_int(p, -1)
    if p == 2:
        return (
            beta(psi) ** -2
            * weil_factor(psi, minus_one)
            * volume(2, 0) ** 2
            * multiplicative_volume(2, 1)
            * volume(2, 3)
            * volume(2, 1) ** (l - 1)
            / 2
        )
    return (
        beta(psi) ** -2
        * weil_factor(psi, minus_one).inverse()
        * volume(p, 1) ** l
        * volume(p, 0)
        * multiplicative_volume(p, 1)
        * volume(p, 2)
    )


def lambda_term(data, case):
    """
    Λ(τ, ψ, s) для нечетного p.

    Λ = 1, если τ тривиален на 𝔬^×, и −τ(ϖ)γ_ψ(ϖ)q^{1/2−s}G(ψ^{−1}) при
    τ|𝔬^× ≡ γ_ψ|𝔬^×.
    """
    p = data.p
    if case == KERNEL_CASE:
        return RatFunc.one(p)
    unit = data.tau.uniformizer_unit
    uniformizer = PAdic.uniformizer(p, unit)
    gauss = kernel_gauss_sum(data.psi.dual(), unit)
    coefficient = (
        -data.tau(uniformizer) * weil_factor(data.psi, uniformizer) * gauss * Scalar.sqrt_q(p)
    )
    return RatFunc.monomial(coefficient, 1)


def intertwined_ratio(params, data):
    """Ψ(W, φ, M(τ, s)f_s)/Ψ(W, φ, f_s)."""
    p = params.p
    if p == 2:
        psi = data.psi
        t = data.tau(PAdic.from_int(2, 2)) ** 2
        one = Scalar.one(2)
        tail = RatFunc(2, {0: -one, 2: t * 4}, {0: one, 2: -(t * 2)})
        coefficient = (
            (psi.at_fraction(Fraction(1, 2)) + 1) * weil_factor(psi, PAdic.from_int(2, 2)).inverse()
        )
        return a_factor(data) * tail * (coefficient * 2)
    case = unit_case(data)
    minus_one = PAdic.from_int(p, -1)
    lam = lambda_term(data, case) / (p - 1)
    bracket = shifted_l_minus_one(data) - lam
    logger.debug(f"Λ для {data.tau}: случай {case}")
    return a_factor(data, case) * bracket * (data.tau(minus_one) * (p - 1))


def psi_closed(params, data, intertwined=False):
    """
    Замкнутая форма Ψ(W, φ, f_s) или Ψ(W, φ, M(τ, s)f_s).

    Args:
        params (SSParams): Параметры π.
        data (SectionData): τ и ψ_α.
        intertwined (bool): Считать интеграл от M(τ, s)f_s.

    Returns:
        RatFunc: Точное значение как функция X = q^{−s}.

    Raises:
        UnsupportedCaseError: Для intertwined при τ|𝔬^× ∉ {1, γ_ψ|𝔬^×}.
    """
    plain = RatFunc.constant(params.p, plain_constant(params, data))
    if not intertwined:
        return plain
    return plain * intertwined_ratio(params, data)


def gamma_psi_prefactor(psi):
    """γ_ψ(−1)·γ(ψ)."""
    return weil_factor(psi, PAdic.from_int(psi.p, -1)) * weil_index(psi)
