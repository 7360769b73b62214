"""
Накрытие Mp(2) группы SL₂(ℚ_p) через коцикл Куботы.

Элементы накрытия — пары ⟨g, ε⟩, ε = ±1, с умножением
⟨g, ε⟩⟨h, ε′⟩ = ⟨gh, εε′σ(g, h)⟩, где

    σ(g, h) = (x(gh)/x(g), x(gh)/x(h)),   x(a, b; c, d) = c при c ≠ 0, иначе d.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from django.conf import settings

from core.constants.arithmetic import (
    MIN_SPLITTING_DEPTH,
    NEIGHBOURHOOD_ODD,
    NEIGHBOURHOOD_TWO,
)
from metaplectic.matrices import SL2
from padic.hilbert import hilbert

logger = logging.getLogger(__name__)

GENERATOR_REDUCTION = (
    "σ(g₁g₂, h) = σ(g₁, g₂h)·σ(g₂, h)·σ(g₁, g₂): из σ = 1 на образующих × 𝒩 "
    "следует σ = 1 на 𝒩 × 𝒩"
)


def kubota_x(g):
    """x(g) = c при c ≠ 0, иначе d."""
    return g.entry("c") if g.c != 0 else g.entry("d")


def cocycle(g, h):
    """
    Коцикл Куботы σ(g, h) ∈ {±1}.

    Args:
        g (SL2): Левый множитель.
        h (SL2): Правый множитель.

    Returns:
        int: 1 или −1.
    """
    x_gh = kubota_x(g @ h)
    return hilbert(x_gh / kubota_x(g), x_gh / kubota_x(h))


@dataclass(frozen=True)
class MpElement:
    """Элемент ⟨g, ε⟩ метаплектического накрытия."""

    g: SL2
    eps: int = 1

    def __post_init__(self):
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be ±1, got {self.eps}")

    @property
    def p(self):
        return self.g.p

    def __mul__(self, other):
        return mp_mul(self, other)

    def inverse(self):
        """⟨g, ε⟩^{−1} = ⟨g^{−1}, ε·σ(g, g^{−1})⟩."""
        inverse = self.g.inverse()
        return MpElement(inverse, self.eps * cocycle(self.g, inverse))

    def __str__(self):
        return f"⟨{self.g}, {self.eps:+d}⟩"


def mp_mul(x, y):
    return MpElement(x.g @ y.g, x.eps * y.eps * cocycle(x.g, y.g))


def lift(g):
    """Тривиальное сечение g ↦ ⟨g, 1⟩."""
    return MpElement(g, 1)


def theta_section(g):
    """
    ϑ(a, b; c, d) = 1 при c = 0 или |c| = 1, иначе (c, d).

    Для нечетного p сечение g ↦ ⟨g, ϑ(g)⟩ — гомоморфизм SL₂(𝔬).

    Raises:
        ValueError: Если g ∉ SL₂(𝔬).
    """
    if not g.is_integral:
        raise ValueError(f"{g} is not in SL2(o)")
    if g.c == 0 or g.valuation("c") == 0:
        return 1
    return hilbert(g.entry("c"), g.entry("d"))


def neighbourhood_profile(p):
    """Показатели 𝒩 = (1 + 𝔭^i, 𝔭^j; 𝔭^k, 1 + 𝔭^l)."""
    return NEIGHBOURHOOD_TWO if p == 2 else NEIGHBOURHOOD_ODD


def neighbourhood_elements(p, depth):
    """Представители 𝒩 по модулю 𝔭^depth: a, b, c перебираются, d = (1 + bc)/a."""
    i, j, k, _ = neighbourhood_profile(p)
    for s, t, r in product(
        range(p ** (depth - i)), range(p ** (depth - j)), range(p ** (depth - k))
    ):
        a, b, c = 1 + s * p**i, t * p**j, r * p**k
        yield SL2(p, a, b, c, Fraction(1 + b * c, a))


def neighbourhood_size(p, depth):
    i, j, k, _ = neighbourhood_profile(p)
    return p ** (3 * depth - i - j - k)


def neighbourhood_generators(p):
    """Топологические образующие 𝒩 и их обратные."""
    i, j, k, _ = neighbourhood_profile(p)
    generators = [SL2.upper(p, p**j), SL2.lower(p, p**k), SL2.diagonal(p, 1 + p**i)]
    return generators + [g.inverse() for g in generators]


def random_integral(rng, p, length=4):
    """Случайный элемент SL₂(ℤ) ⊂ SL₂(𝔬) как произведение элементарных матриц."""
    g = SL2.identity(p)
    for _ in range(length):
        kind = rng.randrange(4)
        if kind == 0:
            factor = SL2.upper(p, rng.randrange(-p**4, p**4))
        elif kind == 1:
            factor = SL2.lower(p, rng.randrange(-p**3, p**3) * p ** rng.randrange(4))
        elif kind == 2:
            unit = rng.randrange(1, p**3)
            factor = SL2.diagonal(p, unit if unit % p else unit + 1)
        else:
            factor = SL2.weyl(p)
        g = g @ factor
    return g


@dataclass
class SplittingReport:
    """
    Итог проверки расщепления накрытия над 𝒩.

    Attributes:
        mode (str): "pairs" — все пары представителей; "generators" —
            образующие 𝒩 против всех представителей.
        elements (int): Число представителей 𝒩 по модулю 𝔭^depth.
        pairs (int): Число всех пар представителей.
        checked (int): Число проверенных пар.
        theta_checked (int): Число проверенных пар для ϑ-сечения SL₂(𝔬).
        counterexample (dict | None): Первая пара с σ ≠ 1.
    """

    p: int
    depth: int
    mode: str
    elements: int = 0
    pairs: int = 0
    checked: int = 0
    theta_checked: int = 0
    counterexample: dict | None = None

    @property
    def passed(self):
        return self.counterexample is None

    def as_dict(self):
        return {
            "p": self.p,
            "depth": self.depth,
            "mode": self.mode,
            "elements": self.elements,
            "pairs": self.pairs,
            "reduction": GENERATOR_REDUCTION if self.mode == "generators" else None,
            "checked": self.checked,
            "theta_checked": self.theta_checked,
            "passed": self.passed,
            "first_counterexample": self.counterexample,
        }


def splitting_check(p, depth, rng=None, theta_samples=0):
    """
    Проверяет, что тривиальное сечение g ↦ ⟨g, 1⟩ — гомоморфизм на 𝒩.

    Если число пар представителей не превышает SPLITTING_PAIR_BUDGET,
    перебираются все пары; иначе каждая образующая 𝒩 сочетается со всеми
    представителями, чего достаточно по тождеству коцикла. Для нечетного p
    дополнительно проверяется ϑ-сечение на theta_samples случайных парах
    из SL₂(𝔬).

    Args:
        p (int): Простое число.
        depth (int): Глубина фактора 𝒩 mod 𝔭^depth, не меньше 4.
        rng (random.Random | None): Генератор для ϑ-выборки.
        theta_samples (int): Число пар для ϑ-сечения.

    Returns:
        SplittingReport: Отчет с первым контрпримером, если он есть.

    Raises:
        ValueError: Если depth < 4.
    """
    if depth < MIN_SPLITTING_DEPTH:
        raise ValueError(f"depth must be at least {MIN_SPLITTING_DEPTH}, got {depth}")
    size = neighbourhood_size(p, depth)
    literal = size**2 <= settings.SPLITTING_PAIR_BUDGET
    left = list(neighbourhood_elements(p, depth)) if literal else neighbourhood_generators(p)
    report = SplittingReport(p, depth, "pairs" if literal else "generators", size, size**2)
    logger.info(
        f"Расщепление над 𝒩 для p={p}, глубина {depth}: "
        f"{size} представителей, режим {report.mode}"
    )
    for g in left:
        for h in neighbourhood_elements(p, depth):
            report.checked += 1
            if cocycle(g, h) != 1:
                report.counterexample = {"g": str(g), "h": str(h)}
                logger.warning(f"σ({g}, {h}) = −1")
                return report
    if p == 2 or rng is None:
        return report
    for _ in range(theta_samples):
        g, h = random_integral(rng, p), random_integral(rng, p)
        report.theta_checked += 1
        if theta_section(g) * theta_section(h) * cocycle(g, h) != theta_section(g @ h):
            report.counterexample = {"g": str(g), "h": str(h), "section": "theta"}
            logger.warning(f"ϑ-сечение не мультипликативно на ({g}, {h})")
            return report
    return report
