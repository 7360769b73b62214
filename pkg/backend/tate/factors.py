"""
Локальные множители Тейта ручных характеров.

Все функции возвращают RatFunc от X = q^{−s}. Соглашение для ε при
характере ψ уровня 1:

- неразветвленный σ: ε(s, σ, ψ) = σ(ϖ)^{−1}·q^{s−1/2};
- разветвленный ручной σ: ε(s, σ, ψ) = q^{−1/2}·Σ_{u ∈ κ^×} σ^{−1}(u)ψ(u),
  константа, согласованная с функциональным уравнением
  γ(s, σ, ψ)·γ(1 − s, σ^{−1}, ψ^{−1}) = 1.
"""

from characters.weil import weil_factor, weil_index
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc


def l_factor(tau):
    """L(s, τ) = 1/(1 − τ(ϖ)X) для неразветвленного τ, иначе 1."""
    if tau.is_unramified:
        return RatFunc.euler_factor(tau.value_on_uniformizer)
    return RatFunc.one(tau.p)


def dual_l_factor(tau):
    """L(1 − s, τ^{−1}) = 1/(1 − τ(ϖ)^{−1}q^{−1}X^{−1})."""
    return l_factor(tau.inverse()).substitute(-1, 1)


def epsilon_factor(tau, psi):
    q = tau.p
    if tau.is_unramified:
        return RatFunc.monomial(
            tau.value_on_uniformizer.inverse() * Scalar.q_power(q, -1), -1
        )
    inverse = tau.inverse()
    total = Scalar.sum(
        q, [inverse.residue_value(u) * psi(PAdic.from_int(q, u)) for u in range(1, q)]
    )
    return RatFunc.constant(q, total * Scalar.q_power(q, -1))


def tate_gamma(tau, psi):
    """
    γ(s, τ, ψ) = ε(s, τ, ψ)·L(1 − s, τ^{−1})/L(s, τ).

    Args:
        tau (TameCharacter): Ручной квазихарактер.
        psi (AdditiveCharacter): Характер уровня 1 (возможно, с единичным
            сдвигом ψ_α).

    Returns:
        RatFunc: Точный γ-множитель.
    """
    return epsilon_factor(tau, psi) * dual_l_factor(tau) / l_factor(tau)


def reflect(f):
    """f(1 − s): X ↦ q^{−1}X^{−1}."""
    return f.substitute(-1, 1)


def twist_gamma(f, sigma, a):
    """
    γ(s, σ, ψ_a) = σ(a)·|a|^{s−1/2}·γ(s, σ, ψ).

    Raises:
        ZeroDivisionError: Для a = 0.
    """
    if a.is_zero:
        raise ZeroDivisionError("ψ_0 is not a character of level 1")
    v = a.valuation
    return RatFunc.monomial(sigma(a) * Scalar.q_power(sigma.p, v), v) * f


def shifted_gamma(tau, psi):
    """γ(2s − 1, τ², ψ₂) как функция X = q^{−s}."""
    square = tau**2
    two = PAdic.from_int(tau.p, 2)
    return twist_gamma(tate_gamma(square, psi), square, two).substitute(2, -1)


def local_coefficient(tau, psi):
    """
    C(s, τ, ψ) = γ_ψ(−1)·γ(ψ)·γ(2s − 1, τ², ψ₂)/γ(s, τ, ψ).

    Для квадратичного τ множитель γ(2s − 1, τ², ψ₂) дает простой полюс в s = 1.
    """
    minus_one = PAdic.from_int(psi.p, -1)
    constant = weil_factor(psi, minus_one) * weil_index(psi)
    return shifted_gamma(tau, psi) / tate_gamma(tau, psi) * constant
