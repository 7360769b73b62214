"""
Вполне разветвленное расширение E = F(ζ), ζ^n = ϖ', над F = ℚ_p.

Элементы E хранятся как многочлены степени < n от ζ с коэффициентами PAdic;
умножение сводится по минимальному многочлену ζ^n − ϖ' точно.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from sympy import Matrix, Rational, discriminant, symbols

from characters.tame import TameCharacter
from core.exceptions import UnsupportedCaseError
from padic.hilbert import hilbert
from padic.numbers import PAdic
from padic.squares import least_nonresidue
from scalars.cyclotomic import Scalar

_Z = symbols("z")


def _rational(value):
    return Rational(value.numerator, value.denominator)


def _from_sympy(p, value, precision):
    return PAdic.from_fraction(p, Fraction(int(value.p), int(value.q)), precision)


@dataclass(frozen=True)
class RamifiedExt:
    """
    E = F(ζ) с минимальным многочленом ζ^n − ϖ'.

    Attributes:
        degree (int): Степень n = [E : F].
        modulus (PAdic): ϖ' = ζ^n, элемент валюации 1.

    Raises:
        ValueError: Если ϖ' не униформизатор или n < 1.
    """

    degree: int
    modulus: PAdic

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"degree must be positive, got {self.degree}")
        if self.modulus.valuation != 1:
            raise ValueError(f"ζ^n = {self.modulus} is not a uniformizer")

    @property
    def p(self):
        return self.modulus.p

    @property
    def precision(self):
        return self.modulus.precision

    # ---- элементы ----

    def element(self, coeffs):
        """x = Σ c_k ζ^k; c_k — PAdic, целые или рациональные числа."""
        coeffs = list(coeffs)
        if len(coeffs) > self.degree:
            raise ValueError(f"{len(coeffs)} coefficients for degree {self.degree}")
        coeffs += [0] * (self.degree - len(coeffs))
        return ExtElement(
            self,
            tuple(
                c if isinstance(c, PAdic) else PAdic.from_fraction(self.p, c, self.precision)
                for c in coeffs
            ),
        )

    def from_base(self, a):
        return self.element([a])

    def one(self):
        return self.from_base(1)

    def zeta(self):
        return self.element([0, 1])

    def power_of_zeta(self, k, unit=1):
        """unit·ζ^k = unit·ϖ'^{k // n}·ζ^{k mod n} для k ≥ 0."""
        q, r = divmod(k, self.degree)
        coeffs = [0] * self.degree
        coeffs[r] = self.modulus**q * unit
        return self.element(coeffs)

    # ---- инварианты ----

    def minimal_polynomial(self):
        return _Z**self.degree - _rational(self.modulus.lift())

    def discriminant(self):
        """Дискриминант ζ^n − ϖ' через результант с производной."""
        value = discriminant(self.minimal_polynomial(), _Z)
        return _from_sympy(self.p, Rational(value), self.precision)

    def discriminant_character(self, uniformizer_unit=1):
        """
        Квадратичный характер b ↦ (disc, b) как ручной характер F^×.

        Args:
            uniformizer_unit (int): Единица u в ϖ = p·u для записи τ(ϖ).

        Returns:
            TameCharacter: Характер с τ(ϖ) = (disc, ϖ).

        Raises:
            UnsupportedCaseError: Для p = 2 символ (disc, ·) не ручной.
        """
        p = self.p
        if p == 2:
            raise UnsupportedCaseError("Характер дискриминанта над ℚ_2 не ручной")
        disc = self.discriminant()
        on_uniformizer = hilbert(disc, PAdic.uniformizer(p, uniformizer_unit))
        on_nonresidue = hilbert(disc, PAdic.from_int(p, least_nonresidue(p)))
        residue_exponent = (p - 1) // 2 if on_nonresidue == -1 else 0
        return TameCharacter(
            p, Scalar.rational(p, on_uniformizer), residue_exponent, uniformizer_unit
        )

    def __str__(self):
        return f"E[ζ^{self.degree} = {self.modulus}]"


@dataclass(frozen=True)
class ExtElement:
    """
    Элемент E: коэффициенты (c_0, …, c_{n−1}) при 1, ζ, …, ζ^{n−1}.

    Attributes:
        ext (RamifiedExt): Расширение.
        coeffs (tuple[PAdic, ...]): Коэффициенты.
    """

    ext: RamifiedExt
    coeffs: tuple

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            if other.ext != self.ext:
                raise ValueError(f"Cannot mix {self.ext} and {other.ext}")
            return other
        if isinstance(other, (int, Fraction, PAdic)):
            return self.ext.from_base(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtElement(self.ext, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(self.ext, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.ext.degree
        result = [PAdic.zero(self.ext.p, self.ext.precision) for _ in range(n)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero:
                    continue
                product = a * b
                k = i + j
                if k >= n:
                    product, k = product * self.ext.modulus, k - n
                result[k] = result[k] + product
        return ExtElement(self.ext, tuple(result))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("only nonnegative powers are supported")
        result = self.ext.one()
        for _ in range(exponent):
            result = result * self
        return result

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.coeffs)

    @property
    def valuation(self):
        """v_E(x) = min_k (n·v(c_k) + k); None для нуля."""
        n = self.ext.degree
        values = [n * c.valuation + k for k, c in enumerate(self.coeffs) if not c.is_zero]
        return min(values) if values else None

    def in_ideal(self, m):
        return self.is_zero or self.valuation >= m

    @property
    def is_principal_unit(self):
        """x ∈ 1 + 𝔭_E."""
        return (self - 1).in_ideal(1)

    def regular_matrix(self):
        """
        Матрица ι(x) умножения на x в базисе ζ^{n−1}, ζ^{n−2}, …, ζ, 1.

        Столбец j — координаты x·ζ^{n−1−j}; строка i отвечает ζ^{n−1−i}.

        Returns:
            list[list[PAdic]]: Матрица n×n над F.
        """
        n = self.ext.degree
        columns = [(self * self.ext.power_of_zeta(n - 1 - j)).coeffs for j in range(n)]
        return [[columns[j][n - 1 - i] for j in range(n)] for i in range(n)]

    def norm(self):
        """N_{E/F}(x) = det ι(x); определитель считается в sympy над ℚ."""
        matrix = Matrix(
            [[_rational(entry.lift()) for entry in row] for row in self.regular_matrix()]
        )
        precision = min(c.precision for c in self.coeffs)
        return _from_sympy(self.ext.p, matrix.det(), precision)

    def __str__(self):
        terms = [
            f"({c})·ζ^{k}" if k else f"({c})"
            for k, c in enumerate(self.coeffs)
            if not c.is_zero
        ]
        return " + ".join(terms) or "0"


def coefficient_floor(ext, m, k):
    """Наименьшая валюация c_k у элемента 𝔭_E^m."""
    return max(0, ceil((m - k) / ext.degree))
