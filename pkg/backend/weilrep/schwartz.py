from dataclasses import dataclass
from fractions import Fraction

from sympy import multiplicity

from scalars.cyclotomic import Scalar


def fraction_valuation(p, x):
    """v_p(x) для ненулевого рационального x."""
    x = Fraction(x)
    return int(multiplicity(p, x.numerator)) - int(multiplicity(p, x.denominator))


@dataclass(frozen=True)
class SchwartzFn:
    """
    Функция Шварца–Брюа на ℚ_p в модели сетки смежных классов.

    φ сосредоточена в 𝔭^{−M} и постоянна на классах по 𝔭^N; значение на
    классе k·p^{−M} + 𝔭^N, k ∈ [0, p^{M+N}), хранится в values[k].

    Attributes:
        p (int): Простое число.
        support (int): M, носитель в 𝔭^{−M}.
        constancy (int): N, постоянство на классах 𝔭^N; M + N ≥ 0.
        values (tuple[Scalar, ...]): p^{M+N} значений.
    """

    p: int
    support: int
    constancy: int
    values: tuple

    def __post_init__(self):
        if self.support + self.constancy < 0:
            raise ValueError(f"empty grid: M={self.support}, N={self.constancy}")
        if len(self.values) != self.size:
            raise ValueError(f"expected {self.size} values, got {len(self.values)}")

    @property
    def size(self):
        return self.p ** (self.support + self.constancy)

    # ---- конструкторы ----

    @classmethod
    def indicator(cls, p, k=0):
        """Характеристическая функция 𝔭^k."""
        return cls(p, -k, k, (Scalar.one(p),))

    @classmethod
    def from_callable(cls, p, support, constancy, func):
        """Значения func(x) на представителях x классов сетки (M, N)."""
        grid = cls(p, support, constancy, (Scalar.zero(p),) * p ** (support + constancy))
        return grid.with_values(func(x) for x in grid.representatives())

    def with_values(self, values):
        values = tuple(
            value if isinstance(value, Scalar) else Scalar.rational(self.p, value)
            for value in values
        )
        return SchwartzFn(self.p, self.support, self.constancy, values)

    # ---- сетка ----

    def representatives(self):
        """Представители k·p^{−M}, k ∈ [0, p^{M+N})."""
        scale = Fraction(self.p) ** (-self.support)
        return [k * scale for k in range(self.size)]

    def index(self, x):
        """Номер класса x или None, если x ∉ 𝔭^{−M}."""
        y = Fraction(x) * Fraction(self.p) ** self.support
        if y.denominator % self.p == 0:
            return None
        modulus = self.size
        return y.numerator * pow(y.denominator, -1, modulus) % modulus if modulus > 1 else 0

    def __call__(self, x):
        k = self.index(x)
        return Scalar.zero(self.p) if k is None else self.values[k]

    def refine(self, support, constancy):
        """
        Та же функция на более мелкой сетке.

        Raises:
            ValueError: Если новая сетка грубее текущей.
        """
        if support < self.support or constancy < self.constancy:
            raise ValueError(
                f"cannot coarsen ({self.support}, {self.constancy}) "
                f"to ({support}, {constancy})"
            )
        if (support, constancy) == (self.support, self.constancy):
            return self
        return SchwartzFn.from_callable(self.p, support, constancy, self)

    def _aligned(self, other):
        if other.p != self.p:
            raise ValueError(f"Cannot mix functions on Q_{self.p} and Q_{other.p}")
        support = max(self.support, other.support)
        constancy = max(self.constancy, other.constancy)
        return self.refine(support, constancy), other.refine(support, constancy)

    # ---- линейные операции ----

    def __add__(self, other):
        left, right = self._aligned(other)
        return left.with_values(a + b for a, b in zip(left.values, right.values))

    def __mul__(self, scalar):
        return self.with_values(value * scalar for value in self.values)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def pointwise(self, func):
        """x ↦ func(x)·φ(x) на той же сетке; func обязана быть постоянной на классах."""
        return self.with_values(
            value * func(x) if value else value
            for x, value in zip(self.representatives(), self.values)
        )

    @property
    def is_zero(self):
        return all(value.is_zero for value in self.values)

    def __eq__(self, other):
        if not isinstance(other, SchwartzFn):
            return NotImplemented
        left, right = self._aligned(other)
        return left.values == right.values

    def __hash__(self):
        return hash((self.p, self.support + self.constancy))

    # ---- замены переменной ----

    def reflected(self):
        """ξ ↦ φ(−ξ)."""
        return SchwartzFn.from_callable(self.p, self.support, self.constancy, lambda x: self(-x))

    def dilated(self, a):
        """ξ ↦ φ(aξ) для ненулевого рационального a."""
        v = fraction_valuation(self.p, a)
        return SchwartzFn.from_callable(
            self.p, self.support + v, self.constancy - v, lambda x: self(a * x)
        )

    def translated(self, t):
        """ξ ↦ φ(ξ + t)."""
        v = fraction_valuation(self.p, t) if t else self.constancy
        support = max(self.support, -v)
        constancy = max(self.constancy, -support)
        return SchwartzFn.from_callable(self.p, support, constancy, lambda x: self(x + t))

    def __str__(self):
        nonzero = sum(1 for value in self.values if value)
        return (
            f"φ[p={self.p}, 𝔭^{-self.support} / 𝔭^{self.constancy}, "
            f"{nonzero}/{self.size} ненулевых]"
        )
