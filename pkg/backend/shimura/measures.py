"""
Меры, фиксированные один раз для всех интегралов.

- аддитивная: vol(𝔭^k) = q^{1/2−k}, в частности vol(𝔬) = q^{1/2};
- мультипликативная: vol^×(𝔬^×) = 1, vol^×(1 + 𝔭^k) = ((q − 1)q^{k−1})^{−1}.
"""

from fractions import Fraction

from scalars.cyclotomic import Scalar
from weilrep.schwartz import fraction_valuation


def volume(p, k):
    """vol(𝔭^k)."""
    return Scalar.q_power(p, 1 - 2 * k)


def units_volume(p):
    """vol(𝔬^×) = vol(𝔬) − vol(𝔭) в аддитивной мере."""
    return Scalar.q_power(p, -1) * (p - 1)


def multiplicative_volume(p, k):
    """vol^×(1 + 𝔭^k); для k = 0 это vol^×(𝔬^×) = 1."""
    if k <= 0:
        return Scalar.one(p)
    return Scalar.rational(p, Fraction(1, (p - 1) * p ** (k - 1)))


def integrate(phi, k=None):
    """
    ∫ φ(x) dx по 𝔭^k (по всему ℚ_p при k = None).

    Сетка измельчается до (max(M, −k), max(N, k)), чтобы 𝔭^k был объединением
    ее классов.

    Args:
        phi (SchwartzFn): Функция на сетке (M, N).
        k (int | None): Показатель области интегрирования.

    Returns:
        Scalar: Точное значение интеграла.
    """
    p = phi.p
    support, constancy = phi.support, phi.constancy
    if k is not None:
        support, constancy = max(support, -k), max(constancy, k)
    fine = phi.refine(support, constancy)
    values = [
        value
        for x, value in zip(fine.representatives(), fine.values)
        if value and (k is None or x == 0 or fraction_valuation(p, x) >= k)
    ]
    return Scalar.sum(p, values) * volume(p, fine.constancy)
