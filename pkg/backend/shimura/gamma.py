"""
Сборка γ(s, π × τ, ψ) и поиск полюса в s = 1.

    γ(s, π × τ, ψ) = π(−I_{2l})·τ(−1)^l·c(s, l, τ)·γ_ψ(−1)γ(ψ)·γ(2s − 1, τ², ψ₂)
                     × Ψ(W, φ, M(τ, s)f_s)/Ψ(W, φ, f_s),

все величины берутся для ψ_α.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from characters.gauss import kernel_gauss_sum
from characters.tame import TameCharacter
from characters.weil import weil_factor, weil_index
from core.exceptions import UnsupportedCaseError, VerificationError
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc
from shimura.closed import gamma_psi_prefactor, psi_closed
from shimura.integrands import WEIL_CASE, unit_case
from shimura.params import SectionData
from tate.factors import shifted_gamma

logger = logging.getLogger(__name__)


def c_factor(tau):
    """c(s, l, τ) = τ(2)^{−2}|2|^{−2(s−1/2)}."""
    p = tau.p
    v2 = 1 if p == 2 else 0
    coefficient = tau(PAdic.from_int(p, 2)) ** -2 * Scalar.q_power(p, -2 * v2)
    return RatFunc.monomial(coefficient, -2 * v2)


def gamma_assemble(params, tau, psi=None):
    """
    γ(s, π × τ, ψ) для π = π_α^ω.

    Args:
        params (SSParams): Параметры π.
        tau (TameCharacter): Ручной квазихарактер.
        psi (AdditiveCharacter | None): Характер уровня 1; по умолчанию ψ(x) = e({x}).

    Returns:
        RatFunc: Точный γ-множитель от X = q^{−s}.

    Raises:
        UnsupportedCaseError: Если τ вне случаев, покрытых замкнутыми формулами.
    """
    data = SectionData.build(params, tau, psi)
    p = params.p
    ratio = psi_closed(params, data, intertwined=True) / psi_closed(params, data)
    sign = params.omega_sign * tau(PAdic.from_int(p, -1)) ** params.l
    gamma = c_factor(tau) * shifted_gamma(tau, data.psi) * ratio
    result = gamma * (gamma_psi_prefactor(data.psi) * sign)
    logger.debug(f"γ(s, {params} × {tau}, {data.psi}) = {result}")
    return result


def expected_trivial_gamma(params, psi=None):
    """ω(−I_{2l})·γ(ψ_α)^{−1}·γ_{ψ_α}^{−1}(ϖ)·q^{1/2−s} для τ = 1, нечетное p."""
    psi = (params.default_psi() if psi is None else psi).twisted(params.alpha)
    coefficient = (
        weil_index(psi).inverse()
        * weil_factor(psi, params.uniformizer).inverse()
        * Scalar.sqrt_q(params.p)
        * params.omega_sign
    )
    return RatFunc.monomial(coefficient, 1)


def expected_two_adic_gamma(tau):
    """τ(2)·2^{1/2−s}."""
    return RatFunc.monomial(tau(PAdic.from_int(2, 2)) * Scalar.sqrt_q(2), 1)


def pole_value(params, psi=None):
    """
    τ(ϖ) = γ_{ψ_α}^{−1}(ϖ)·|G|/G для G = G(ψ_α^{−1}), |G| = √q.

    Raises:
        UnsupportedCaseError: Для p = 2.
    """
    if params.p == 2:
        raise UnsupportedCaseError("Поиск полюса определен только для нечетного p")
    psi = (params.default_psi() if psi is None else psi).twisted(params.alpha)
    gauss = kernel_gauss_sum(psi.dual(), params.uniformizer_unit)
    return weil_factor(psi, params.uniformizer).inverse() * Scalar.sqrt_q(params.p) / gauss


@dataclass
class PoleScanReport:
    """
    Итог поиска полюса γ(s, π × τ, ψ) в s = 1 среди квадратичных τ.

    Attributes:
        params (SSParams): Параметры π.
        candidates (list[dict]): Порядки в X = q^{−1} для каждого τ.
        pole (TameCharacter): Единственный τ с полюсом.
        zero (TameCharacter | None): Кандидат с τ|𝔬^× ≡ γ_{ψ_α}|𝔬^×, у которого
            Ψ(W, φ, M(τ, s)f_s) обращается в ноль при s = 1.
    """

    params: object
    candidates: list = field(default_factory=list)
    pole: TameCharacter = None
    zero: TameCharacter = None

    def as_dict(self):
        return {
            "params": self.params.to_json(),
            "candidates": [{**row, "tau": row["tau"].to_json()} for row in self.candidates],
            "pole": self.pole.to_json(),
            "zero": None if self.zero is None else self.zero.to_json(),
        }


def pole_scan(params, psi=None):
    """
    Перебирает четыре ручных квадратичных τ и находит единственный с полюсом.

    Найденный τ должен совпадать с γ_{ψ_α} на 𝔬^× и иметь
    τ(ϖ) = γ_{ψ_α}^{−1}(ϖ)|G|/G. У остальных трех кандидатов полюс γ(1, τ², ψ₂)
    сокращается нулем отношения Ψ(W, φ, M(τ, s)f_s)/Ψ(W, φ, f_s).

    Args:
        params (SSParams): Параметры π, p нечетное.
        psi (AdditiveCharacter | None): Характер уровня 1.

    Returns:
        PoleScanReport: Кандидаты, полюс и нуль.

    Raises:
        UnsupportedCaseError: Для p = 2.
        VerificationError: Если полюсов не ровно один или он не тот.
    """
    if params.p == 2:
        raise UnsupportedCaseError("Поиск полюса определен только для нечетного p")
    p = params.p
    point = Scalar.rational(p, Fraction(1, p))
    report = PoleScanReport(params)
    poles, zeros = [], []
    for tau in TameCharacter.quadratic_characters(p, params.uniformizer_unit):
        data = SectionData.build(params, tau, psi)
        gamma = gamma_assemble(params, tau, psi)
        ratio = psi_closed(params, data, intertwined=True) / psi_closed(params, data)
        order = gamma.order_at(point)
        shifted_order = shifted_gamma(tau, data.psi).order_at(point)
        ratio_order = ratio.order_at(point)
        case = unit_case(data)
        report.candidates.append(
            {
                "tau": tau,
                "case": case,
                "order": order,
                "shifted_order": shifted_order,
                "ratio_order": ratio_order,
                "canceled": shifted_order < 0 <= order,
            }
        )
        if order < 0:
            poles.append(tau)
        if case == WEIL_CASE and ratio_order > 0 and order >= 0:
            zeros.append(tau)
    if len(poles) != 1:
        raise VerificationError(
            f"Найдено {len(poles)} полюсов вместо одного",
            {"params": str(params), "poles": [str(tau) for tau in poles]},
        )
    (report.pole,) = poles
    expected = pole_value(params, psi)
    if report.pole.residue_exponent != (p - 1) // 2 or report.pole.value_on_uniformizer != expected:
        raise VerificationError(
            "Полюс найден у τ, не удовлетворяющего критерию",
            {"params": str(params), "pole": str(report.pole), "expected_value": str(expected)},
        )
    report.zero = zeros[0] if zeros else None
    if report.zero is not None and report.zero.value_on_uniformizer != -expected:
        raise VerificationError(
            "Нуль найден у неожиданного τ",
            {"params": str(params), "zero": str(report.zero)},
        )
    logger.info(f"Полюс γ(s, {params} × τ, ψ) в s = 1: τ = {report.pole}")
    return report
