from __future__ import annotations

from fractions import Fraction

from django.conf import settings
from sympy import multiplicity

from core.exceptions import PrecisionError


def _zero_bound(x, y):
    """Точность нуля x·y: точный ноль поглощает, O(p^b)·y дает O(p^{b+v(y)})."""
    if any(z.valuation is None and z.bound is None for z in (x, y)):
        return None
    return sum(z.valuation if z.bound is None else z.bound for z in (x, y))


class PAdic:
    """
    Усеченное p-адическое число u·p^v.

    Значение хранится как валюация v и единица u по модулю p^N, где N
    (precision) — число известных значащих цифр. Ноль — отдельный объект с
    валюацией None. Точный ноль (bound = None) получается из конструкторов;
    сокращение в сумме дает ноль O(p^bound), известный лишь по модулю
    p^bound. Вопросы о цифрах глубже bound вызывают PrecisionError.

    Attributes:
        p (int): Простое число.
        valuation (int | None): Валюация; None для нуля.
        unit (int): Единица u ∈ [1, p^N), взаимно простая с p (0 для нуля).
        precision (int): Число значащих цифр N.
        bound (int | None): Для нуля O(p^bound) его абсолютная точность.

    Methods:
        from_int, from_fraction, zero: Конструкторы.
        digits(k): Вычет целого числа по модулю p^k.
        abs_exponent(): Показатель k, для которого |a| = q^{-k}.
        lift(): Рациональный представитель.
    """

    __slots__ = ("p", "valuation", "unit", "precision", "bound")

    def __init__(self, p, valuation, unit, precision=None, bound=None):
        if precision is None:
            precision = settings.PADIC_PRECISION
        self.p = p
        self.precision = precision
        self.bound = None
        if valuation is None:
            self.valuation = None
            self.unit = 0
            self.bound = bound
            return
        if precision < settings.PADIC_PRECISION_FLOOR:
            raise PrecisionError(
                f"Осталось {precision} значащих цифр, минимум "
                f"{settings.PADIC_PRECISION_FLOOR}"
            )
        unit %= p**precision
        if unit % p == 0:
            raise ValueError(f"Unit digits {unit} are divisible by {p}")
        self.valuation = valuation
        self.unit = unit

    # ---- конструкторы ----

    @classmethod
    def zero(cls, p, precision=None, bound=None):
        return cls(p, None, 0, precision, bound)

    @classmethod
    def from_int(cls, p, value, precision=None):
        if value == 0:
            return cls.zero(p, precision)
        v = int(multiplicity(p, value))
        return cls(p, v, value // p**v, precision)

    @classmethod
    def from_fraction(cls, p, value, precision=None):
        value = Fraction(value)
        if value == 0:
            return cls.zero(p, precision)
        if precision is None:
            precision = settings.PADIC_PRECISION
        num, den = value.numerator, value.denominator
        v_num = int(multiplicity(p, num))
        v_den = int(multiplicity(p, den))
        modulus = p**precision
        unit = (num // p**v_num) * pow(den // p**v_den, -1, modulus) % modulus
        return cls(p, v_num - v_den, unit, precision)

    @classmethod
    def uniformizer(cls, p, unit=1, precision=None):
        """ϖ = p·unit."""
        return cls(p, 1, unit, precision)

    def _coerce(self, other):
        if isinstance(other, PAdic):
            if other.p != self.p:
                raise ValueError(f"Cannot mix Q_{self.p} and Q_{other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return PAdic.from_fraction(self.p, other, self.precision)
        return NotImplemented

    # ---- свойства ----

    @property
    def is_zero(self):
        return self.valuation is None

    @property
    def is_unit(self):
        return self.valuation == 0

    def in_ideal(self, k):
        """
        a ∈ 𝔭^k. Точный ноль лежит в любом идеале.

        Raises:
            PrecisionError: Для нуля O(p^bound) при k > bound.
        """
        if self.valuation is None:
            if self.bound is not None and k > self.bound:
                raise PrecisionError(
                    f"Ноль известен по модулю {self.p}^{self.bound}, нужен 𝔭^{k}"
                )
            return True
        return self.valuation >= k

    def abs_exponent(self):
        if self.valuation is None:
            raise ValueError("|0| has no finite exponent")
        return self.valuation

    @property
    def absolute_precision(self):
        if self.valuation is None:
            return self.bound
        return self.valuation + self.precision

    def digits(self, k):
        """
        Вычет a mod p^k для a ∈ 𝔬.

        Raises:
            ValueError: Если a ∉ 𝔬.
            PrecisionError: Если известных цифр меньше k.
        """
        if k <= 0 or self.in_ideal(k):
            return 0
        if self.valuation < 0:
            raise ValueError(f"{self!r} is not integral")
        if self.valuation + self.precision < k:
            raise PrecisionError(f"Нужно {k} цифр, известно {self.absolute_precision}")
        return self.unit * self.p**self.valuation % self.p**k

    def unit_residue(self, k=1):
        """Единица u mod p^k."""
        if self.valuation is None:
            raise ZeroDivisionError("zero has no unit part")
        if self.precision < k:
            raise PrecisionError(f"Нужно {k} цифр единицы, известно {self.precision}")
        return self.unit % self.p**k

    def lift(self):
        if self.valuation is None:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.valuation

    def shift(self, k):
        """a·p^k без потери точности."""
        if self.valuation is None:
            if self.bound is None:
                return self
            return PAdic.zero(self.p, self.precision, self.bound + k)
        return PAdic(self.p, self.valuation + k, self.unit, self.precision)

    def truncated(self, bound):
        """a mod p^bound; bound = None оставляет число как есть."""
        if bound is None:
            return self
        if self.valuation is None:
            top = bound if self.bound is None else min(self.bound, bound)
            return PAdic.zero(self.p, self.precision, top)
        if self.valuation >= bound:
            return PAdic.zero(self.p, self.precision, bound)
        return PAdic(
            self.p, self.valuation, self.unit, min(self.precision, bound - self.valuation)
        )

    def unit_part(self):
        if self.valuation is None:
            raise ZeroDivisionError("zero has no unit part")
        return PAdic(self.p, 0, self.unit, self.precision)

    # ---- арифметика ----

    def __neg__(self):
        if self.valuation is None:
            return self
        return PAdic(self.p, self.valuation, -self.unit, self.precision)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.valuation is None:
            return other.truncated(self.bound)
        if other.valuation is None:
            return self.truncated(other.bound)
        p = self.p
        v = min(self.valuation, other.valuation)
        top = min(self.absolute_precision, other.absolute_precision)
        modulus = p ** (top - v)
        total = (
            self.unit * p ** (self.valuation - v)
            + other.unit * p ** (other.valuation - v)
        ) % modulus
        if total == 0:
            return PAdic.zero(p, self.precision, top)
        shift = int(multiplicity(p, total))
        return PAdic(p, v + shift, total // p**shift, top - v - shift)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.valuation is None or other.valuation is None:
            precision = min(self.precision, other.precision)
            return PAdic.zero(self.p, precision, _zero_bound(self, other))
        precision = min(self.precision, other.precision)
        return PAdic(
            self.p,
            self.valuation + other.valuation,
            self.unit * other.unit,
            precision,
        )

    __rmul__ = __mul__

    def inverse(self):
        if self.valuation is None:
            raise ZeroDivisionError("division by the p-adic zero")
        return PAdic(
            self.p,
            -self.valuation,
            pow(self.unit, -1, self.p**self.precision),
            self.precision,
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.valuation is None:
            if not exponent:
                return PAdic.from_int(self.p, 1)
            bound = None if self.bound is None else self.bound * exponent
            return PAdic.zero(self.p, self.precision, bound)
        return PAdic(
            self.p, self.valuation * exponent, pow(self.unit, exponent), self.precision
        )

    # ---- сравнение ----

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PAdic.from_fraction(self.p, other, self.precision)
        if not isinstance(other, PAdic) or other.p != self.p:
            return NotImplemented
        if self.valuation is None or other.valuation is None:
            return self.valuation is None and other.valuation is None
        if self.valuation != other.valuation:
            return False
        modulus = self.p ** min(self.precision, other.precision)
        return (self.unit - other.unit) % modulus == 0

    def __hash__(self):
        return hash((self.p, self.valuation))

    def to_json(self):
        return {
            "p": self.p,
            "valuation": self.valuation,
            "unit": self.unit,
            "precision": self.precision,
            "bound": self.bound,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["p"], data["valuation"], data["unit"], data["precision"], data.get("bound")
        )

    def __repr__(self):
        if self.valuation is None:
            if self.bound is not None:
                return f"PAdic({self.p}, O({self.p}^{self.bound}))"
            return f"PAdic({self.p}, 0)"
        return f"PAdic({self.p}, v={self.valuation}, u={self.unit}, N={self.precision})"

    def __str__(self):
        if self.valuation is None:
            return "0" if self.bound is None else f"O({self.p}^{self.bound})"
        if self.valuation == 0:
            return f"{self.unit} (mod {self.p}^{self.precision})"
        return f"{self.unit}·{self.p}^{self.valuation} (mod {self.p}^{self.precision})"
