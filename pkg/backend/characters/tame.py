from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from sympy import discrete_log, primitive_root

from core.exceptions import UnsupportedCaseError
from scalars.cyclotomic import Scalar


@lru_cache(maxsize=None)
def residue_generator(p):
    """Фиксированная образующая g группы κ^× = 𝔽_p^×."""
    return int(primitive_root(p)) if p > 2 else 1


@lru_cache(maxsize=None)
def residue_log(p, u):
    """log_g(u mod p)."""
    u %= p
    if u == 0:
        raise ZeroDivisionError("residue of a non-unit has no logarithm")
    if p == 2:
        return 0
    return int(discrete_log(p, u, residue_generator(p)))


@dataclass(frozen=True)
class TameCharacter:
    """
    Ручной квазихарактер τ группы ℚ_p^×.

    τ(ϖ^k·w) = τ(ϖ)^k·η(w mod 𝔭), где ϖ = p·uniformizer_unit, а η(g^j) =
    e(j·r/(p − 1)) для образующей g поля вычетов. На 1 + 𝔭 характер
    тривиален по построению. Порядок η должен быть степенью двойки, иначе
    его значения не лежат в кольце Scalar.

    Attributes:
        p (int): Простое число.
        value_on_uniformizer (Scalar): τ(ϖ), ненулевой.
        residue_exponent (int): r mod (p − 1).
        uniformizer_unit (int): Единица u в ϖ = p·u.
    """

    p: int
    value_on_uniformizer: Scalar
    residue_exponent: int = 0
    uniformizer_unit: int = 1

    def __post_init__(self):
        if self.value_on_uniformizer.is_zero:
            raise ZeroDivisionError("τ(ϖ) must be nonzero")
        if self.value_on_uniformizer.q != self.p:
            raise ValueError(f"τ(ϖ) lives over q={self.value_on_uniformizer.q}, not {self.p}")
        order = self.p - 1
        exponent = self.residue_exponent % order
        object.__setattr__(self, "residue_exponent", exponent)
        residue_order = order // gcd(order, exponent)
        if residue_order & (residue_order - 1):
            raise UnsupportedCaseError(
                f"Характер поля вычетов порядка {residue_order} не поддерживается"
            )

    # ---- конструкторы ----

    @classmethod
    def trivial(cls, p, uniformizer_unit=1):
        return cls(p, Scalar.one(p), 0, uniformizer_unit)

    @classmethod
    def unramified(cls, p, value, uniformizer_unit=1):
        return cls(p, value, 0, uniformizer_unit)

    @classmethod
    def from_exponents(cls, p, zeta_order, zeta_exp, residue_exponent, uniformizer_unit=1):
        """τ(ϖ) = ζ_{zeta_order}^{zeta_exp}."""
        value = Scalar.root_of_unity(p, zeta_order, zeta_exp)
        return cls(p, value, residue_exponent, uniformizer_unit)

    @classmethod
    def quadratic_characters(cls, p, uniformizer_unit=1):
        """Четыре ручных квадратичных характера (два для p = 2)."""
        residues = (0,) if p == 2 else (0, (p - 1) // 2)
        return [
            cls(p, Scalar.rational(p, sign), r, uniformizer_unit)
            for r in residues
            for sign in (1, -1)
        ]

    # ---- значения ----

    def residue_value(self, u):
        """η(u) для целого u, не делящегося на p."""
        if not self.residue_exponent:
            return Scalar.one(self.p)
        log = residue_log(self.p, u)
        return Scalar.from_phase(self.p, Fraction(log * self.residue_exponent, self.p - 1))

    def __call__(self, x):
        """
        τ(x) для ненулевого x ∈ ℚ_p.

        Raises:
            ZeroDivisionError: Для нуля.
        """
        if x.is_zero:
            raise ZeroDivisionError("τ(0) is undefined")
        k = x.valuation
        unit = x.unit_residue(1) * pow(self.uniformizer_unit, -k, self.p) % self.p
        return self.value_on_uniformizer**k * self.residue_value(unit)

    # ---- группа характеров ----

    def __mul__(self, other):
        if not isinstance(other, TameCharacter):
            return NotImplemented
        if (other.p, other.uniformizer_unit) != (self.p, self.uniformizer_unit):
            raise ValueError("Characters over different (p, ϖ) cannot be multiplied")
        return TameCharacter(
            self.p,
            self.value_on_uniformizer * other.value_on_uniformizer,
            self.residue_exponent + other.residue_exponent,
            self.uniformizer_unit,
        )

    def __pow__(self, k):
        return TameCharacter(
            self.p,
            self.value_on_uniformizer**k,
            self.residue_exponent * k,
            self.uniformizer_unit,
        )

    def inverse(self):
        return self ** (-1)

    @property
    def is_unramified(self):
        return self.residue_exponent == 0

    @property
    def is_quadratic(self):
        return (
            self.value_on_uniformizer**2 == 1
            and 2 * self.residue_exponent % (self.p - 1) == 0
        )

    @property
    def is_trivial(self):
        return self.is_unramified and self.value_on_uniformizer == 1

    # ---- сериализация ----

    def to_json(self):
        return {
            "p": self.p,
            "value_on_uniformizer": self.value_on_uniformizer.to_json(),
            "residue_exponent": self.residue_exponent,
            "residue_order": self.p - 1,
            "uniformizer_unit": self.uniformizer_unit,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["p"],
            Scalar.from_json(data["value_on_uniformizer"]),
            data["residue_exponent"],
            data.get("uniformizer_unit", 1),
        )

    def __str__(self):
        return (
            f"τ[p={self.p}, τ(ϖ)={self.value_on_uniformizer}, "
            f"r={self.residue_exponent}/{self.p - 1}]"
        )
