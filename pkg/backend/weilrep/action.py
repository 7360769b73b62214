"""
Представление Вейля ω_ψ метаплектической группы Mp(2) на S(ℚ_p).

Образующие действуют так:

- ⟨m(a), ε⟩: φ(ξ) ↦ ε·γ_ψ^{−1}(a)·|a|^{1/2}·φ(ξa);
- ⟨n(u), ε⟩: φ(ξ) ↦ ε·ψ(uξ²)·φ(ξ);
- ⟨w₁, 1⟩: φ ↦ β_ψ^{−1}·φ̂.

Произвольный ⟨g, ε⟩ раскладывается в произведение образующих, а знак
разложения пересчитывается через mp_mul.
"""

import logging
from functools import reduce
from math import ceil

from characters.weil import beta, weil_factor
from core.exceptions import ArithmeticLibraryError
from metaplectic.cocycle import MpElement, lift, mp_mul
from metaplectic.matrices import SL2
from padic.hilbert import hilbert
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from weilrep.fourier import fourier, two_valuation
from weilrep.schwartz import SchwartzFn, fraction_valuation

logger = logging.getLogger(__name__)

DIAGONAL, UPPER, WEYL = "m", "n", "w"


def quadratic_phase(phi, psi, u):
    """ξ ↦ ψ(uξ²)·φ(ξ) на сетке, где множитель постоянен на классах."""
    if u == 0:
        return phi
    v = fraction_valuation(phi.p, u)
    constancy = max(
        phi.constancy,
        phi.support + 1 - v - two_valuation(phi.p),
        ceil((1 - v) / 2),
    )
    refined = phi.refine(phi.support, constancy)
    return refined.pointwise(lambda x: psi.at_fraction(u * x * x))


def translate(phi, psi, x, z=0):
    """Элемент (x, 0, z) группы Гейзенберга: ξ ↦ ψ(z)·φ(ξ + x)."""
    return phi.translated(x) * psi.at_fraction(z)


def modulate(phi, psi, y):
    """Элемент (0, y, 0) группы Гейзенберга: ξ ↦ ψ(2ξy)·φ(ξ)."""
    if y == 0:
        return phi
    v = fraction_valuation(phi.p, y)
    constancy = max(phi.constancy, 1 - v - two_valuation(phi.p))
    refined = phi.refine(phi.support, constancy)
    return refined.pointwise(lambda x: psi.at_fraction(2 * x * y))


def act_diagonal(phi, psi, a):
    a_padic = PAdic.from_fraction(phi.p, a)
    factor = weil_factor(psi, a_padic).inverse() * Scalar.q_power(phi.p, -a_padic.valuation)
    return phi.dilated(a) * factor


def act_weyl(phi, psi):
    return fourier(phi, psi) * beta(psi).inverse()


def factorize(g):
    """
    Разложение g ∈ SL₂ в слово из m(a), n(u), w₁ (слева направо).

    - c = 0: g = m(a)·n(b/a);
    - v(c) ≥ v(a): g = n̄(c/a)·m(a)·n(b/a), n̄(z) = w₁·n(−z)·m(−1)·w₁;
    - иначе Брюа: g = n(a/c)·m(−1/c)·w₁·n(d/c).
    """
    p = g.p
    if g.c == 0:
        word = [(DIAGONAL, g.a), (UPPER, g.b / g.a)]
    elif g.a != 0 and fraction_valuation(p, g.c) >= fraction_valuation(p, g.a):
        word = [
            (WEYL, None),
            (UPPER, -g.c / g.a),
            (DIAGONAL, -1),
            (WEYL, None),
            (DIAGONAL, g.a),
            (UPPER, g.b / g.a),
        ]
    else:
        word = [(UPPER, g.a / g.c), (DIAGONAL, -1 / g.c), (WEYL, None), (UPPER, g.d / g.c)]
    return [(kind, value) for kind, value in word if not (kind == UPPER and value == 0)]


def letter_matrix(p, kind, value):
    if kind == DIAGONAL:
        return SL2.diagonal(p, value)
    if kind == UPPER:
        return SL2.upper(p, value)
    return SL2.weyl(p)


def word_sign(g, word):
    """Знак s, при котором ⟨g, 1⟩ = s·Π⟨буква, 1⟩."""
    product = reduce(mp_mul, (lift(letter_matrix(g.p, kind, value)) for kind, value in word))
    if product.g != g:
        raise ArithmeticLibraryError(f"word {word} does not multiply to {g}")
    return product.eps


def act(x, phi, psi):
    """
    ω_ψ(⟨g, ε⟩)φ.

    Args:
        x (MpElement | SL2): Элемент накрытия; SL2 понимается как ⟨g, 1⟩.
        phi (SchwartzFn): Функция на сетке.
        psi (AdditiveCharacter): Характер уровня 1.

    Returns:
        SchwartzFn: Результат действия.
    """
    if isinstance(x, SL2):
        x = lift(x)
    word = factorize(x.g)
    sign = x.eps * word_sign(x.g, word)
    result = phi
    for kind, value in reversed(word):
        if kind == DIAGONAL:
            result = act_diagonal(result, psi, value)
        elif kind == UPPER:
            result = quadratic_phase(result, psi, value)
        else:
            result = act_weyl(result, psi)
    logger.debug("ω(%s) на %s: слово длины %d, знак %+d", x, phi, len(word), sign)
    return result * sign


def lower_borel_closed(phi, psi, a, c):
    """
    Замкнутая формула для b = (a, 0; a^{−1}c, a^{−1}), c ≠ 0:

        ω_ψ(b)φ(x) = (a^{−1}, c)·β_ψ^{−2}·γ_ψ^{−1}(a)·γ_ψ(−1)·|a|^{1/2}
                     × ∫ ψ(2axy)ψ(−cy²) ∫ φ(z)ψ(−2yz) dz dy.

    Множитель |a|^{1/2} приходит из действия m(a) и равен 1 для единицы a.

    Raises:
        ValueError: Если c = 0.
    """
    if c == 0:
        raise ValueError("the closed form needs c != 0")
    p = phi.p
    a_padic = PAdic.from_fraction(p, a)
    minus_one = PAdic.from_int(p, -1)
    inner = fourier(phi, psi).reflected()
    outer = fourier(quadratic_phase(inner, psi, -c), psi).dilated(a)
    constant = (
        beta(psi) ** -2
        * weil_factor(psi, a_padic).inverse()
        * weil_factor(psi, minus_one)
        * Scalar.q_power(p, -a_padic.valuation)
        * hilbert(a_padic.inverse(), PAdic.from_fraction(p, c))
    )
    return outer * constant


def check_beta(psi, phi=None):
    """
    β_ψ² = γ_ψ(−1) и ω(⟨w₁, 1⟩)² = ω(⟨−I, 1⟩) на пробной функции.

    Returns:
        bool: Выполнены ли оба равенства.
    """
    p = psi.p
    if phi is None:
        phi = SchwartzFn.indicator(p, 1).translated(1)
    squared = beta(psi) ** 2 == weil_factor(psi, PAdic.from_int(p, -1))
    w = MpElement(SL2.weyl(p))
    twice = act(w, act(w, phi, psi), psi)
    return squared and twice == act(w * w, phi, psi)
