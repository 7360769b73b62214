"""
Прямое суммирование Ψ по клеткам сетки.

dg-интеграл берется по B̄₁: b = (a, 0; c/a, 1/a), a ∈ (1 + 𝔭)/(1 + 𝔭^D),
c ∈ 𝔭/𝔭^D. Действие Вейля считается через weilrep.act, интеграл
сплетения через сумму по слоям. Клетки c перечисляются лексикографически
по наборам цифр, нулевая клетка представлена элементом p^D.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from itertools import product

from core.exceptions import UnsupportedCaseError
from metaplectic.cocycle import cocycle
from metaplectic.matrices import SL2
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc
from shimura.integrands import (
    CLOSED,
    SHELLS,
    intertwine_section,
    mp_lower_borel,
    section_eval,
    whittaker_eval,
)
from shimura.measures import integrate, multiplicative_volume, volume
from weilrep.action import act, lower_borel_closed
from weilrep.schwartz import SchwartzFn

logger = logging.getLogger(__name__)


def schwartz_vector(p):
    """φ = 1_𝔭 для нечетного p и 1_𝔬 для p = 2."""
    return SchwartzFn.indicator(p, 0 if p == 2 else 1)


def ideal_cells(p, depth):
    """Представители 𝔭/𝔭^depth: Σ d_i p^i по наборам цифр (d_1, …, d_{depth−1})."""
    return [
        sum(digit * p ** (i + 1) for i, digit in enumerate(digits))
        for digits in product(range(p), repeat=depth - 1)
    ]


def c_cells(p, depth):
    return [Fraction(c) if c else Fraction(p) ** depth for c in ideal_cells(p, depth)]


def a_cells(p, depth):
    return [Fraction(1 + x) for x in ideal_cells(p, depth)]


def cell_weight(params, depth):
    """vol^×(1 + 𝔭^D)·vol(𝔭^D)·vol(𝔭)^{l−2}; множитель r-блока — объем 𝔭^{l−2}."""
    p = params.p
    return multiplicative_volume(p, depth) * volume(p, depth) * volume(p, 1) ** (params.l - 2)


def weil_integral(data, inner, a, c):
    """∫_𝔭 ω_ψ(⟨b, 1⟩)φ(x) dx при уже вычисленном ω_ψ(n̄(c))φ."""
    p = data.p
    sign = cocycle(SL2.diagonal(p, a), SL2.lower(p, c))
    return integrate(act(SL2.diagonal(p, a), inner, data.psi), 1) * sign


def section_value(data, a, c, intertwined, path=SHELLS):
    if intertwined:
        return intertwine_section(
            data, PAdic.from_fraction(data.p, c), PAdic.from_fraction(data.p, a), path
        )
    return section_eval(data, mp_lower_borel(data.p, a, c))


def chunk_sum(params, data, depth, intertwined, start, stop):
    """
    Сумма вкладов клеток c с номерами [start, stop).

    Args:
        params (SSParams): Параметры π.
        data (SectionData): τ и ψ_α.
        depth (int): Глубина сетки D.
        intertwined (bool): Интегрировать M(τ, s)f_s вместо f_s.
        start (int): Первая клетка c.
        stop (int): Клетка после последней.

    Returns:
        RatFunc: Частичная сумма.
    """
    p = params.p
    phi = schwartz_vector(p)
    zero, r = PAdic.zero(p), [PAdic.zero(p)] * (params.l - 2)
    weights = defaultdict(list)
    cells = c_cells(p, depth)[start:stop]
    for c in cells:
        inner = act(SL2.lower(p, c), phi, data.psi)
        c_padic = PAdic.from_fraction(p, c)
        for a in a_cells(p, depth):
            w = whittaker_eval(params, PAdic.from_fraction(p, a), c_padic, zero, r, data.psi)
            if w.is_zero:
                continue
            x_integral = weil_integral(data, inner, a, c)
            if x_integral.is_zero:
                continue
            section = section_value(data, a, c, intertwined)
            if not section.is_zero:
                weights[section].append(w * x_integral)
    logger.debug(f"Клетки c [{start}, {stop}) при D={depth}: {len(weights)} различных сечений")
    total = RatFunc.constant(p, 0)
    for section, values in weights.items():
        total = total + section * Scalar.sum(p, values)
    return total * cell_weight(params, depth)


def cell_integrand(params, data, a, c, intertwined, closed):
    """
    W·∫ω_ψ(b)φ·f на одной клетке (a, c).

    closed=True заменяет действие Вейля замкнутой формулой для
    нижнетреугольной борелевской матрицы, а слои интеграла сплетения
    замкнутой формулой.
    """
    p = params.p
    r = [PAdic.zero(p)] * (params.l - 2)
    w = whittaker_eval(
        params, PAdic.from_fraction(p, a), PAdic.from_fraction(p, c), PAdic.zero(p), r, data.psi
    )
    phi = schwartz_vector(p)
    if closed:
        x_integral = integrate(lower_borel_closed(phi, data.psi, a, c), 1)
    else:
        x_integral = weil_integral(data, act(SL2.lower(p, c), phi, data.psi), a, c)
    section = section_value(data, a, c, intertwined, CLOSED if closed else SHELLS)
    return section * (w * x_integral)


def first_differing_cell(params, data, depth, intertwined):
    """
    Первая клетка (c, a), на которой прямое и замкнутое вычисления расходятся.

    Returns:
        dict | None: Описание клетки для отчета или None.
    """
    p = params.p
    for c in c_cells(p, depth):
        for a in a_cells(p, depth):
            direct = cell_integrand(params, data, a, c, intertwined, closed=False)
            try:
                closed = cell_integrand(params, data, a, c, intertwined, closed=True)
            except UnsupportedCaseError as error:
                return {"c": str(c), "a": str(a), "direct": str(direct), "closed": str(error)}
            if direct != closed:
                return {"c": str(c), "a": str(a), "direct": str(direct), "closed": str(closed)}
    return None
