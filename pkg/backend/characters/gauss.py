from functools import lru_cache

from characters.additive import AdditiveCharacter
from characters.tame import TameCharacter
from core.exceptions import UnsupportedCaseError
from padic.hilbert import hilbert
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar


def gauss_sum(psi, residue_exponent):
    """
    Сумма Гаусса Σ_{x ∈ κ^×} ψ(x)·η(x), где η — характер κ^× с показателем r.

    Для нетривиального η выполнено G·conj(G) = q, для тривиального G = −1.

    Args:
        psi (AdditiveCharacter): Характер уровня 1.
        residue_exponent (int): r mod (p − 1).

    Returns:
        Scalar: Точное значение в ℚ(ζ_p, ζ_{p−1}).
    """
    return _gauss_sum(psi.p, psi.sign, psi.twist % psi.p, residue_exponent % (psi.p - 1))


@lru_cache(maxsize=None)
def _gauss_sum(p, sign, twist, residue_exponent):
    psi = AdditiveCharacter(p, sign, twist)
    eta = TameCharacter(p, Scalar.one(p), residue_exponent)
    return Scalar.sum(
        p, [psi(PAdic.from_int(p, x)) * eta.residue_value(x) for x in range(1, p)]
    )


def kernel_gauss_sum(psi, uniformizer_unit=1):
    """
    G(ψ) = Σ_{x ∈ κ^×} ψ(x)·(ϖ, x) для нечетного p.

    В лемме о Λ(τ, ψ, s) участвует G(ψ^{−1}) = kernel_gauss_sum(psi.dual()).

    Raises:
        UnsupportedCaseError: Для p = 2.
    """
    p = psi.p
    if p == 2:
        raise UnsupportedCaseError("(ϖ, ·)-сумма Гаусса определена только для нечетного p")
    uniformizer = PAdic.uniformizer(p, uniformizer_unit)
    terms = []
    for x in range(1, p):
        unit = PAdic.from_int(p, x)
        terms.append(psi(unit) * hilbert(uniformizer, unit))
    return Scalar.sum(p, terms)
