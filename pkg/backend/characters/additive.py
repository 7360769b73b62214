from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from core.exceptions import PrecisionError
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar


@dataclass(frozen=True)
class AdditiveCharacter:
    """
    Аддитивный характер ψ_a(x) = e(sign·{a·x/p}) поля ℚ_p.

    При единице a характер имеет уровень 1: тривиален на 𝔭 и нетривиален
    на 𝔬. Для нечетного p ψ(1) = ζ_p, для p = 2 ψ(x) = e^{±πix}.

    Attributes:
        p (int): Простое число.
        sign (int): ±1; ψ^{−1} отличается только знаком.
        twist (int): Единица a, задающая ψ_a(x) = ψ(ax).
    """

    p: int
    sign: int = 1
    twist: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be ±1, got {self.sign}")
        if self.twist % self.p == 0:
            raise ValueError(f"twist {self.twist} is not a unit at {self.p}")

    @property
    def q(self):
        return self.p

    def phase(self, x):
        """
        Доля оборота r ∈ [0, 1) с ψ(x) = e(r).

        Raises:
            PrecisionError: Если глубина 1 − v(x) больше PSI_MAX_DEPTH или
                известных цифр x не хватает.
        """
        if x.in_ideal(1):
            return Fraction(0)
        depth = 1 - x.valuation
        if depth > settings.PSI_MAX_DEPTH:
            raise PrecisionError(
                f"ψ на глубине {depth} превышает бюджет {settings.PSI_MAX_DEPTH}"
            )
        modulus = self.p**depth
        residue = self.twist * x.unit_residue(depth) % modulus
        return Fraction(self.sign * residue % modulus, modulus)

    def __call__(self, x):
        return Scalar.from_phase(self.q, self.phase(x))

    def at_fraction(self, value):
        return self(PAdic.from_fraction(self.p, value))

    def dual(self):
        """ψ^{−1}."""
        return AdditiveCharacter(self.p, -self.sign, self.twist)

    def twisted(self, a):
        """ψ_a для единицы a (целый представитель)."""
        return AdditiveCharacter(self.p, self.sign, self.twist * a)

    def to_json(self):
        return {"p": self.p, "sign": self.sign, "twist": self.twist}

    @classmethod
    def from_json(cls, data):
        return cls(data["p"], data["sign"], data["twist"])

    def __str__(self):
        sign = "+" if self.sign > 0 else "-"
        return f"ψ[p={self.p}, {sign}, a={self.twist}]"
