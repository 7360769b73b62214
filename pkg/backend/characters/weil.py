import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from django.conf import settings

from core.exceptions import NonStabilizationError
from padic.numbers import PAdic
from padic.squares import class_representatives, key_to_int, square_class_key
from scalars.cyclotomic import Scalar

logger = logging.getLogger(__name__)


def _quadratic_sum(p, sign, value, k):
    """
    Σ_{x ∈ 𝔭^{−k}/𝔭^m} ψ(b·x²) для b = value (целое, b ≠ 0).

    m — наименьшая глубина, на которой x ↦ ψ(bx²) постоянна на смежных
    классах: m = k + 1 − v(b) + v(2).
    """
    b = PAdic.from_int(p, value)
    v = b.valuation
    m = max(k + 1 - v + (1 if p == 2 else 0), -k)
    exponent = 2 * k + 1 - v
    count = p ** (k + m)
    if exponent <= 0:
        return Scalar.rational(p, count)
    modulus = p**exponent
    unit = sign * b.unit % modulus
    phases = Counter(unit * y * y % modulus for y in range(count))
    return Scalar.from_phases(p, {Fraction(r, modulus): c for r, c in phases.items()})


@lru_cache(maxsize=None)
def _weil_index_of_class(p, sign, key):
    value = key_to_int(p, key)
    v = key[0]
    start = v // 2 + (1 if p == 2 else 0)
    previous = None
    for k in range(start, start + settings.WEIL_INDEX_MAX_DEPTH):
        total = _quadratic_sum(p, sign, value, k)
        if total.is_zero:
            previous = None
            continue
        normalized = total / total.exact_abs()
        logger.debug("γ(ψ_%s) над ℚ_%s: k=%s, значение %s", value, p, k, normalized)
        if previous is not None and normalized == previous:
            if normalized ** 8 != 1:
                raise NonStabilizationError(f"γ(ψ_{value}) = {normalized} не корень степени 8")
            return normalized
        previous = normalized
    raise NonStabilizationError(
        f"Индекс Вейля γ(ψ_{value}) над ℚ_{p} не стабилизировался "
        f"за {settings.WEIL_INDEX_MAX_DEPTH} шагов"
    )


def weil_index(psi, a=None):
    """
    Индекс Вейля γ(ψ_a) характера x ↦ ψ(a·x²).

    Значение зависит только от класса квадратов a·twist, поэтому сумма
    считается один раз на класс: нормированная сумма Σ ψ(a·x²) по шару
    𝔭^{−k} наращивается по k, пока два соседних значения не совпадут.

    Args:
        psi (AdditiveCharacter): Характер уровня 1.
        a (PAdic | None): Ненулевой аргумент; None означает a = 1.

    Returns:
        Scalar: Корень из единицы степени 8.

    Raises:
        ZeroDivisionError: Для a = 0.
        NonStabilizationError: Если сумма не стабилизировалась в пределах
            WEIL_INDEX_MAX_DEPTH.
    """
    twist = PAdic.from_int(psi.p, psi.twist)
    argument = twist if a is None else twist * a
    return _weil_index_of_class(psi.p, psi.sign, square_class_key(argument))


def weil_factor(psi, a):
    """γ_ψ(a) = γ(ψ_a)/γ(ψ)."""
    return weil_index(psi, a) / weil_index(psi)


def beta(psi):
    """β_ψ = ±γ(ψ)^{−1}; знак задается BETA_SIGN."""
    return weil_index(psi).inverse() * settings.BETA_SIGN


def weil_table(psi):
    """γ_ψ на представителях всех классов квадратов."""
    return {rep: weil_factor(psi, rep) for rep in class_representatives(psi.p)}
