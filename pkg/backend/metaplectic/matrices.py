from dataclasses import dataclass
from fractions import Fraction

from padic.numbers import PAdic


@dataclass(frozen=True)
class SL2:
    """
    Матрица (a, b; c, d) из SL₂(ℚ) ⊂ SL₂(ℚ_p) с точными рациональными элементами.

    ℚ плотно в ℚ_p, поэтому все матрицы, которые строят проверки, рациональны;
    в PAdic переводятся только x-значения для символа Гильберта.

    Raises:
        ValueError: Если det ≠ 1.
    """

    p: int
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"det {self.a * self.d - self.b * self.c} != 1 for {self}")

    # ---- конструкторы ----

    @classmethod
    def identity(cls, p):
        return cls(p, 1, 0, 0, 1)

    @classmethod
    def minus_identity(cls, p):
        return cls(p, -1, 0, 0, -1)

    @classmethod
    def weyl(cls, p):
        """w₁ = (0, 1; −1, 0)."""
        return cls(p, 0, 1, -1, 0)

    @classmethod
    def upper(cls, p, u):
        """n(u) = (1, u; 0, 1)."""
        return cls(p, 1, u, 0, 1)

    @classmethod
    def lower(cls, p, c):
        """n̄(c) = (1, 0; c, 1)."""
        return cls(p, 1, 0, c, 1)

    @classmethod
    def diagonal(cls, p, a):
        """m(a) = diag(a, a^{−1})."""
        a = Fraction(a)
        return cls(p, a, 0, 0, 1 / a)

    @classmethod
    def lower_borel(cls, p, a, c):
        """b = (a, 0; a^{−1}c, a^{−1}) = m(a)·n̄(c)."""
        a = Fraction(a)
        return cls(p, a, 0, Fraction(c) / a, 1 / a)

    # ---- групповые операции ----

    def __matmul__(self, other):
        if self.p != other.p:
            raise ValueError(f"Cannot mix SL2(Q_{self.p}) and SL2(Q_{other.p})")
        return SL2(
            self.p,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self):
        return SL2(self.p, self.d, -self.b, -self.c, self.a)

    def __neg__(self):
        return SL2(self.p, -self.a, -self.b, -self.c, -self.d)

    # ---- свойства ----

    def entry(self, name):
        """Элемент матрицы как PAdic."""
        return PAdic.from_fraction(self.p, getattr(self, name))

    def valuation(self, name):
        value = getattr(self, name)
        if value == 0:
            return None
        return self.entry(name).valuation

    @property
    def is_integral(self):
        return all(
            self.valuation(name) is None or self.valuation(name) >= 0
            for name in ("a", "b", "c", "d")
        )

    def in_neighbourhood(self, profile):
        """g ∈ (1 + 𝔭^i, 𝔭^j; 𝔭^k, 1 + 𝔭^l) для profile = (i, j, k, l)."""
        i, j, k, l = profile
        checks = ((self.a - 1, i), (self.b, j), (self.c, k), (self.d - 1, l))
        return all(
            value == 0 or PAdic.from_fraction(self.p, value).valuation >= depth
            for value, depth in checks
        )

    def __str__(self):
        return f"({self.a}, {self.b}; {self.c}, {self.d})"
