"""
Подынтегральные функции интеграла Шимуры: W, f_s и M(τ, s)f_s.

Функции от s возвращаются как RatFunc от X = q^{−s}; Z = q^{1/2}·X.
"""

import logging
from fractions import Fraction

from characters.weil import weil_factor
from core.exceptions import UnsupportedCaseError, VerificationError
from metaplectic.cocycle import MpElement, cocycle, lift
from metaplectic.matrices import SL2
from padic.hilbert import hilbert
from padic.numbers import PAdic
from padic.squares import class_digits
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc
from shimura.measures import multiplicative_volume, units_volume
from tate.factors import l_factor
from weilrep.schwartz import fraction_valuation

logger = logging.getLogger(__name__)

CLOSED, SHELLS = "closed", "shells"
KERNEL_CASE, WEIL_CASE = "kernel", "weil"


def whittaker_eval(params, a, c, x, r, psi=None):
    """
    Функция Уиттекера W на семействе подынтегральных выражений.

    Носитель лежит в N_l Z I^+: W обращается в ноль, если a ∉ 1 + 𝔭 или
    одна из координат c, x, r вне 𝔭. На носителе W = ψ^{−1}(a^{−1}cϖ^{−1}).

    Args:
        params (SSParams): Параметры π.
        a (PAdic): Диагональная координата.
        c (PAdic): Нижняя унипотентная координата.
        x (PAdic): Координата Гейзенберга.
        r (list[PAdic]): l − 2 координаты блока R^{l,1}.
        psi (AdditiveCharacter | None): Характер ψ_α; по умолчанию
            строится из params.

    Returns:
        Scalar: Значение W.

    Raises:
        ValueError: Если число координат r не равно l − 2.
    """
    if len(r) != params.l - 2:
        raise ValueError(f"expected {params.l - 2} r-coordinates, got {len(r)}")
    p = params.p
    if psi is None:
        psi = params.default_psi().twisted(params.alpha)
    if a.is_zero or not (a - 1).in_ideal(1):
        return Scalar.zero(p)
    if not all(coordinate.in_ideal(1) for coordinate in (c, x, *r)):
        return Scalar.zero(p)
    if c.is_zero:
        return Scalar.one(p)
    return psi.dual()(c / (a * params.uniformizer))


def section_eval(data, g):
    """
    Сечение f_s на элементе накрытия.

    g = P·n̄(z), P = (b, *; 0, b^{−1}), z = g₂₁/g₂₂; f_s(g) ≠ 0 только при
    g₂₂ ≠ 0 и z ∈ 𝔭^k (k = 2 для нечетного p, k = 3 для p = 2), и тогда

        f_s(⟨g, ε⟩) = ε·σ(P, n̄(z))·|b|^{s+1/2}·γ_ψ(b)·τ(b).

    Args:
        data (SectionData): τ, ψ_α и профиль 𝒩.
        g (MpElement | SL2): Элемент; SL2 понимается как ⟨g, 1⟩.

    Returns:
        RatFunc: Одночлен c·X^{v(b)} или ноль.
    """
    if isinstance(g, SL2):
        g = lift(g)
    p = data.p
    matrix = g.g
    if matrix.d == 0:
        return RatFunc.constant(p, 0)
    z = matrix.c / matrix.d
    if z != 0 and fraction_valuation(p, z) < data.depth:
        return RatFunc.constant(p, 0)
    b = 1 / matrix.d
    borel = SL2(p, b, matrix.b, 0, matrix.d)
    eps = g.eps * cocycle(borel, SL2.lower(p, z))
    b_padic = PAdic.from_fraction(p, b)
    v = b_padic.valuation
    value = weil_factor(data.psi, b_padic) * data.tau(b_padic) * Scalar.q_power(p, -v)
    return RatFunc.monomial(value * eps, v)


def z_power(p, k):
    """Z^k = q^{k/2}·X^k."""
    return RatFunc.monomial(Scalar.q_power(p, k), k)


def shell_sum(data, c, a, v):
    """
    S(v) = ∫_{ϖ^v𝔬^×} (−ct, a)·τ(t)·γ_ψ^{−1}(ta)·1[a²t + c ∈ 𝔭^k] d^×t.

    Подынтегральное выражение постоянно на классах t·(1 + 𝔭^m) при
    m = max(m_sq, k − v), где m_sq цифр определяют класс квадратов.
    При c = 0 знак (−ct, a) заменяется на (at, a).
    """
    p = data.p
    k = data.depth
    m = max(class_digits(p), k - v)
    terms = []
    for w in range(1, p**m):
        if w % p == 0:
            continue
        t = PAdic(p, v, w)
        if not (a * a * t + c).in_ideal(k):
            continue
        sign = hilbert(a * t, a) if c.is_zero else hilbert(-(c * t), a)
        terms.append(data.tau(t) * weil_factor(data.psi, t * a).inverse() * sign)
    logger.debug("S(%s) при c=%s, a=%s: %d классов по модулю 1+𝔭^%s", v, c, a, len(terms), m)
    return Scalar.sum(p, terms) * multiplicative_volume(p, m)


def intertwine_by_shells(data, c, a):
    """
    M(τ, s)f_s на b = (a, 0; c/a, 1/a) суммированием по слоям |t| = q^{−v}.

    При v(c) < k вклад дает единственный слой v = v(c). Иначе все слои
    v ≥ k удовлетворяют S(v + 2) = τ(p)²S(v), и хвост суммируется
    как геометрическая прогрессия по Z².

    Raises:
        VerificationError: Если соотношение S(v + 2) = τ(p)²S(v) нарушено.
    """
    p = data.p
    k = data.depth
    prefactor = units_volume(p) * data.tau(PAdic.from_int(p, -1))
    if not c.is_zero and c.valuation < k:
        v = c.valuation
        return z_power(p, v) * shell_sum(data, c, a, v) * prefactor
    step = data.tau(PAdic.from_int(p, p)) ** 2
    first, second = shell_sum(data, c, a, k), shell_sum(data, c, a, k + 1)
    third = shell_sum(data, c, a, k + 2)
    if third != first * step:
        raise VerificationError(
            "Слои интеграла сплетения не образуют геометрическую прогрессию",
            {"c": str(c), "a": str(a), "S(k)": str(first), "S(k+2)": str(third)},
        )
    head = z_power(p, k) * first + z_power(p, k + 1) * second
    return head * RatFunc.euler_factor(step * p, 2) * prefactor


def unit_case(data):
    """
    Какой из двух покрытых случаев реализует τ|𝔬^× (нечетное p).

    Returns:
        str: WEIL_CASE при τ|𝔬^× ≡ γ_ψ|𝔬^×, KERNEL_CASE при тривиальном
            τ γ_ψ^{−1}(ϖ, ·) на 𝔬^×.

    Raises:
        UnsupportedCaseError: Для остальных τ.
    """
    p = data.p
    uniformizer = PAdic.uniformizer(p, data.tau.uniformizer_unit)
    units = [PAdic.from_int(p, x) for x in range(1, p)]
    taus = [data.tau(u) for u in units]
    weils = [weil_factor(data.psi, u) for u in units]
    if taus == weils:
        return WEIL_CASE
    if all(t == w * hilbert(uniformizer, u) for t, w, u in zip(taus, weils, units)):
        return KERNEL_CASE
    raise UnsupportedCaseError(f"τ|𝔬^× для {data.tau} не равен ни 1, ни γ_ψ|𝔬^×")


def a_factor(data, case=None):
    """
    Множитель A(τ, ψ, s).

    - нечетное p, τ тривиален на 𝔬^×: γ_ψ^{−1}(ϖ)τ(ϖ)q^{−s};
    - нечетное p, τ|𝔬^× ≡ γ_ψ|𝔬^×: q^{−1/2};
    - p = 2: τ(2)q^{−s}/4.
    """
    p = data.p
    if p == 2:
        return RatFunc.monomial(data.tau(PAdic.from_int(2, 2)) / 4, 1)
    case = case or unit_case(data)
    if case == WEIL_CASE:
        return RatFunc.constant(p, Scalar.q_power(p, -1))
    uniformizer = PAdic.uniformizer(p, data.tau.uniformizer_unit)
    coefficient = weil_factor(data.psi, uniformizer).inverse() * data.tau(uniformizer)
    return RatFunc.monomial(coefficient, 1)


def shifted_l_minus_one(data):
    """L(2s − 1, τ²) − 1."""
    return l_factor(data.tau**2).substitute(2, -1) - 1


def intertwine_closed_odd(data, c, a):
    p = data.p
    minus_one = PAdic.from_int(p, -1)
    if c.is_zero or c.in_ideal(2):
        tail = shifted_l_minus_one(data) * (data.tau(minus_one) * (p - 1))
        return a_factor(data) * tail
    if c.valuation == 1:
        coefficient = data.tau(c) * weil_factor(data.psi, -c).inverse()
        return RatFunc.monomial(coefficient, 1)
    raise UnsupportedCaseError(f"c = {c} вне 𝔭")


def intertwine_closed_two(data, c, a):
    psi = data.psi
    two = PAdic.from_int(2, 2)
    doubled = a_factor(data) * 2
    if c.is_zero or c.valuation >= 3:
        sign = hilbert(a, a) if c.is_zero else hilbert(-c, a)
        coefficient = (
            weil_factor(psi, two).inverse()
            * weil_factor(psi, a).inverse()
            * (psi.at_fraction(Fraction(1, 2)) + 1)
            * sign
        )
        return doubled * shifted_l_minus_one(data) * coefficient
    if c.valuation == 2:
        return RatFunc.constant(2, 0)
    if c.valuation == 1:
        return doubled * weil_factor(psi, -(a * c)).inverse()
    raise UnsupportedCaseError(f"c = {c} вне 𝔭")


def intertwine_section(data, c, a, path=CLOSED):
    """
    M(τ, s)f_s(⟨b, 1⟩) для b = (a, 0; c/a, 1/a), a ∈ 1 + 𝔭.

    Два независимых пути дают одну и ту же RatFunc: замкнутая формула с
    разбором случаев по первым цифрам c (CLOSED) и сумма по слоям с
    геометрическим хвостом (SHELLS). Замкнутый путь покрывает τ|𝔬^× ∈
    {1, γ_ψ|𝔬^×} для нечетного p и все ручные τ над ℚ₂.

    Args:
        data (SectionData): τ, ψ_α и профиль 𝒩.
        c (PAdic): Нижний элемент; ноль допустим.
        a (PAdic): Диагональный элемент из 1 + 𝔭.
        path (str): CLOSED или SHELLS.

    Returns:
        RatFunc: Значение как функция X = q^{−s}.

    Raises:
        ValueError: Если a ∉ 1 + 𝔭 или путь неизвестен.
        UnsupportedCaseError: Замкнутый путь для τ вне покрытых случаев.
    """
    if a.is_zero or not (a - 1).in_ideal(1):
        raise ValueError(f"a = {a} is not in 1 + p")
    if path == SHELLS:
        return intertwine_by_shells(data, c, a)
    if path != CLOSED:
        raise ValueError(f"unknown path {path!r}")
    if data.p == 2:
        return intertwine_closed_two(data, c, a)
    return intertwine_closed_odd(data, c, a)


def mp_lower_borel(p, a, c):
    """⟨(a, 0; c/a, 1/a), 1⟩ для рациональных a, c."""
    return MpElement(SL2.lower_borel(p, a, c))
