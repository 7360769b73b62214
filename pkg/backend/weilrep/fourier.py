import logging

from scalars.cyclotomic import Scalar
from weilrep.schwartz import SchwartzFn

logger = logging.getLogger(__name__)


def two_valuation(p):
    return 1 if p == 2 else 0


def self_dual_volume(p, k):
    """
    Объем 𝔭^k в мере, самодвойственной относительно ψ₂ = ψ(2·).

    Для ψ уровня 1: vol(𝔭^k) = |2|^{1/2}·q^{1/2−k}.
    """
    return Scalar.q_power(p, 1 - 2 * k - two_valuation(p))


def fourier(phi, psi):
    """
    φ̂(y) = ∫ φ(x)ψ(2xy) dx по ψ₂-самодвойственной мере.

    Для φ на сетке (M, N) преобразование живет на сетке
    (N + v(2) − 1, M + 1 − v(2)) того же размера; φ̂̂(y) = φ(−y).

    Args:
        phi (SchwartzFn): Функция на сетке (M, N).
        psi (AdditiveCharacter): Характер уровня 1.

    Returns:
        SchwartzFn: Точное преобразование Фурье.
    """
    p = phi.p
    if psi.p != p:
        raise ValueError(f"ψ over Q_{psi.p} cannot transform functions on Q_{p}")
    v2 = two_valuation(p)
    support = phi.constancy + v2 - 1
    constancy = phi.support + 1 - v2
    volume = self_dual_volume(p, phi.constancy)
    terms = [(x, value) for x, value in zip(phi.representatives(), phi.values) if value]
    logger.debug("Фурье %s: %d слагаемых на %d точках", phi, len(terms), phi.size)

    def transform(y):
        total = Scalar.sum(p, [value * psi.at_fraction(2 * x * y) for x, value in terms])
        return total * volume

    return SchwartzFn.from_callable(p, support, constancy, transform)
