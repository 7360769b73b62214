import logging
from functools import lru_cache
from itertools import product

from sympy import multiplicity

from core.constants.arithmetic import HILBERT_ORACLE_LIFT_ODD, HILBERT_ORACLE_LIFT_TWO
from padic.squares import key_to_int, legendre, square_class_key

logger = logging.getLogger(__name__)


def _epsilon(u):
    return (u - 1) // 2 % 2


def _omega(u):
    return (u * u - 1) // 8 % 2


@lru_cache(maxsize=None)
def hilbert_from_keys(p, key_a, key_b):
    alpha, u = key_a
    beta, v = key_b
    if p == 2:
        exponent = _epsilon(u) * _epsilon(v) + alpha * _omega(v) + beta * _omega(u)
        return -1 if exponent % 2 else 1
    sign = -1 if alpha * beta * (p - 1) // 2 % 2 else 1
    if beta:
        sign *= legendre(u, p)
    if alpha:
        sign *= legendre(v, p)
    return sign


def hilbert(a, b):
    """
    Квадратичный символ Гильберта (a, b) по замкнутой формуле.

    Для нечетного p: (−1)^{αβ(p−1)/2}(u/p)^β(v/p)^α, где a = u·p^α, b = v·p^β.
    Для p = 2: (−1)^{ε(u)ε(v) + αω(v) + βω(u)}.

    Args:
        a (PAdic): Ненулевое число.
        b (PAdic): Ненулевое число над тем же p.

    Returns:
        int: 1 или −1.

    Raises:
        ZeroDivisionError: Если один из аргументов равен нулю.
    """
    if a.p != b.p:
        raise ValueError(f"Cannot mix Q_{a.p} and Q_{b.p}")
    return hilbert_from_keys(a.p, square_class_key(a), square_class_key(b))


def _has_hensel_root(p, A, B, point):
    x, y, z = point
    value = A * x * x + B * y * y - z * z
    if value == 0:
        return True
    partials = [d for d in (2 * A * x, 2 * B * y, 2 * z) if d]
    if not partials:
        return False
    e = min(int(multiplicity(p, d)) for d in partials)
    return int(multiplicity(p, value)) > 2 * e


def _chart_points(p, chart, level):
    """Точки карты (x=1), (y=1, p|x), (z=1, p|x, p|y) по модулю p^level."""
    step = p**level
    ranges = []
    for index in range(3):
        if index == chart:
            ranges.append((1,))
        elif index < chart:
            ranges.append(range(0, step, p))
        else:
            ranges.append(range(step))
    return product(*ranges)


@lru_cache(maxsize=None)
def _isotropic(p, A, B):
    """Есть ли у z² = Ax² + By² примитивное решение: подъем по уровням."""
    max_level = HILBERT_ORACLE_LIFT_TWO if p == 2 else HILBERT_ORACLE_LIFT_ODD
    for chart in range(3):
        layer = [
            point
            for point in _chart_points(p, chart, 1)
            if (A * point[0] ** 2 + B * point[1] ** 2 - point[2] ** 2) % p == 0
        ]
        for level in range(1, max_level + 1):
            if any(_has_hensel_root(p, A, B, point) for point in layer):
                return True
            if level == max_level:
                break
            step = p**level
            modulus = step * p
            lifted = []
            for x, y, z in layer:
                shifts = [
                    (0,) if index == chart else range(p) for index in range(3)
                ]
                for dx, dy, dz in product(*shifts):
                    point = (x + dx * step, y + dy * step, z + dz * step)
                    if (A * point[0] ** 2 + B * point[1] ** 2 - point[2] ** 2) % modulus == 0:
                        lifted.append(point)
            layer = lifted
    return False


def hilbert_oracle(a, b):
    """
    Символ Гильберта через разрешимость z² = ax² + by².

    Примитивные решения ищутся по модулю p^j в трех аффинных картах
    и проверяются критерием Гензеля v(f) > 2·min v(∂f).
    """
    p = a.p
    A = key_to_int(p, square_class_key(a))
    B = key_to_int(p, square_class_key(b))
    result = 1 if _isotropic(p, A, B) else -1
    logger.debug(f"Оракул ({A}, {B})_{p} = {result}")
    return result
