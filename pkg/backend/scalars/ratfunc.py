from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from scalars.cyclotomic import Scalar


def _trim(poly: list[Scalar]) -> list[Scalar]:
    while poly and poly[-1].is_zero:
        poly.pop()
    return poly


def _poly_divmod(num: list[Scalar], den: list[Scalar]) -> tuple[list[Scalar], list[Scalar]]:
    q = den[0].q
    num = list(num)
    lead_inverse = den[-1].inverse()
    quotient = [Scalar.zero(q)] * max(len(num) - len(den) + 1, 0)
    while len(_trim(num)) >= len(den):
        shift = len(num) - len(den)
        factor = num[-1] * lead_inverse
        quotient[shift] = factor
        for index, coeff in enumerate(den):
            num[shift + index] = num[shift + index] - factor * coeff
        num.pop()
    return quotient, num


def _poly_gcd(a: list[Scalar], b: list[Scalar]) -> list[Scalar]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, remainder = _poly_divmod(a, b)
        a, b = b, _trim(remainder)
    lead = a[-1].inverse()
    return [coeff * lead for coeff in a]


def _poly_eval(poly: list[Scalar], point: Scalar) -> Scalar:
    result = Scalar.zero(point.q)
    for coeff in reversed(poly):
        result = result * point + coeff
    return result


def _divide_by_root(poly: list[Scalar], root: Scalar) -> list[Scalar]:
    """Синтетическое деление на (X − root) без остатка."""
    quotient = [Scalar.zero(root.q)] * (len(poly) - 1)
    carry = Scalar.zero(root.q)
    for degree in range(len(poly) - 1, 0, -1):
        carry = poly[degree] + carry * root
        quotient[degree - 1] = carry
    return quotient


def _root_multiplicity(poly: list[Scalar], root: Scalar) -> tuple[int, list[Scalar]]:
    count = 0
    while len(poly) > 1 and _poly_eval(poly, root).is_zero:
        poly = _divide_by_root(poly, root)
        count += 1
    return count, poly


def _laurent_mul(left: dict, right: dict, q: int) -> dict:
    acc = defaultdict(list)
    for k1, c1 in left.items():
        for k2, c2 in right.items():
            acc[k1 + k2].append(c1 * c2)
    result = {k: Scalar.sum(q, cs) for k, cs in acc.items()}
    return {k: c for k, c in result.items() if not c.is_zero}


def _laurent_add(left: dict, right: dict, q: int) -> dict:
    acc = defaultdict(list)
    for k, c in list(left.items()) + list(right.items()):
        acc[k].append(c)
    result = {k: Scalar.sum(q, cs) for k, cs in acc.items()}
    return {k: c for k, c in result.items() if not c.is_zero}


class RatFunc:
    """
    Рациональная функция от X = q^{−s} с коэффициентами Scalar.

    Каноническая форма: X^m·P(X)/Q(X), где P(0) ≠ 0, Q(0) = 1 и
    gcd(P, Q) = 1. Хранится как пара словарей {показатель: коэффициент}.
    q^{s−1/2} записывается как (√q)^{−1}·X^{−1}.
    """

    __slots__ = ("q", "numerator", "denominator")

    def __init__(self, q: int, numerator: dict, denominator: dict | None = None):
        if denominator is None:
            denominator = {0: Scalar.one(q)}
        numerator = {k: c for k, c in numerator.items() if not c.is_zero}
        denominator = {k: c for k, c in denominator.items() if not c.is_zero}
        if not denominator:
            raise ZeroDivisionError("denominator of a rational function is zero")
        self.q = q
        self.numerator, self.denominator = self._canonical(q, numerator, denominator)

    @staticmethod
    def _canonical(q: int, numerator: dict, denominator: dict) -> tuple[dict, dict]:
        if not numerator:
            return {}, {0: Scalar.one(q)}
        low_num = min(numerator)
        low_den = min(denominator)
        P = [Scalar.zero(q)] * (max(numerator) - low_num + 1)
        for k, c in numerator.items():
            P[k - low_num] = c
        Q = [Scalar.zero(q)] * (max(denominator) - low_den + 1)
        for k, c in denominator.items():
            Q[k - low_den] = c
        if len(Q) > 1 and len(P) > 1:
            common = _poly_gcd(P, Q)
            if len(common) > 1:
                P, _ = _poly_divmod(P, common)
                Q, _ = _poly_divmod(Q, common)
        normalizer = Q[0].inverse()
        shift = low_num - low_den
        num = {k + shift: c * normalizer for k, c in enumerate(P) if not c.is_zero}
        den = {k: c * normalizer for k, c in enumerate(Q) if not c.is_zero}
        return num, den

    # ---- конструкторы ----

    @classmethod
    def constant(cls, q: int, value) -> RatFunc:
        if not isinstance(value, Scalar):
            value = Scalar.rational(q, value)
        return cls(q, {0: value})

    @classmethod
    def one(cls, q: int) -> RatFunc:
        return cls.constant(q, 1)

    @classmethod
    def monomial(cls, coeff: Scalar, exponent: int) -> RatFunc:
        """coeff·X^exponent."""
        return cls(coeff.q, {exponent: coeff})

    @classmethod
    def x(cls, q: int) -> RatFunc:
        """X = q^{−s}."""
        return cls.monomial(Scalar.one(q), 1)

    @classmethod
    def q_power_s(cls, q: int, s_coeff: int, half_shift: int) -> RatFunc:
        """q^{s_coeff·s + half_shift/2} = q^{half_shift/2}·X^{−s_coeff}."""
        return cls.monomial(Scalar.q_power(q, half_shift), -s_coeff)

    @classmethod
    def euler_factor(cls, value: Scalar, exponent: int = 1) -> RatFunc:
        """1/(1 − value·X^exponent)."""
        q = value.q
        one = Scalar.one(q)
        if exponent >= 0:
            return cls(q, {0: one}, {0: one, exponent: -value})
        return cls(q, {-exponent: one}, {-exponent: one, 0: -value})

    def _coerce(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            if other.q != self.q:
                raise ValueError(f"Cannot mix q={self.q} and q={other.q}")
            return other
        if isinstance(other, (Scalar, int, Fraction)):
            return RatFunc.constant(self.q, other)
        return NotImplemented

    # ---- арифметика ----

    def __add__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.q
        num = _laurent_add(
            _laurent_mul(self.numerator, other.denominator, q),
            _laurent_mul(other.numerator, self.denominator, q),
            q,
        )
        return RatFunc(q, num, _laurent_mul(self.denominator, other.denominator, q))

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(self.q, {k: -c for k, c in self.numerator.items()}, self.denominator)

    def __sub__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RatFunc:
        return (-self) + other

    def __mul__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.q
        return RatFunc(
            q,
            _laurent_mul(self.numerator, other.numerator, q),
            _laurent_mul(self.denominator, other.denominator, q),
        )

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.q, self.denominator, self.numerator)

    def __truediv__(self, other) -> RatFunc:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> RatFunc:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> RatFunc:
        base = self if exponent >= 0 else self.inverse()
        result = RatFunc.one(self.q)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # ---- анализ ----

    @property
    def is_zero(self) -> bool:
        return not self.numerator

    def _dense(self) -> tuple[int, list[Scalar], list[Scalar]]:
        low = min(self.numerator)
        P = [Scalar.zero(self.q)] * (max(self.numerator) - low + 1)
        for k, c in self.numerator.items():
            P[k - low] = c
        Q = [Scalar.zero(self.q)] * (max(self.denominator) + 1)
        for k, c in self.denominator.items():
            Q[k] = c
        return low, P, Q

    def substitute(self, scale: int, shift) -> RatFunc:
        """
        f(Y) с Y = q^{−(scale·s + shift)}, то есть Y^k ↦ q^{−shift·k}·X^{scale·k}.

        Для γ(2s−1, ·) scale = 2, shift = −1: Y = q·X².
        """
        shift = Fraction(shift)
        q = self.q

        def image(poly):
            result = {}
            for k, c in poly.items():
                half = -2 * shift * k
                if half.denominator != 1:
                    raise ValueError(f"shift {shift} does not give a power of sqrt(q)")
                result[scale * k] = c * Scalar.q_power(q, int(half))
            return result

        return RatFunc(q, image(self.numerator), image(self.denominator))

    def evaluate(self, point: Scalar) -> Scalar:
        if self.is_zero:
            return Scalar.zero(self.q)
        low, P, Q = self._dense()
        return _poly_eval(P, point) * point**low / _poly_eval(Q, point)

    def order_at(self, point: Scalar) -> int:
        """
        Порядок в точке X₀ ≠ 0 (отрицательный — полюс).

        Raises:
            ValueError: Для X₀ = 0.
            ZeroDivisionError: Для нулевой функции.
        """
        if point.is_zero:
            raise ValueError("order_at expects a nonzero point")
        if self.is_zero:
            raise ZeroDivisionError("the zero function has no order")
        _, P, Q = self._dense()
        zeros, _ = _root_multiplicity(P, point)
        poles, _ = _root_multiplicity(Q, point)
        return zeros - poles

    def leading_coefficient_at(self, point: Scalar) -> Scalar:
        """Значение f(X)/(X − X₀)^{ord} в X₀."""
        low, P, Q = self._dense()
        _, P = _root_multiplicity(P, point)
        _, Q = _root_multiplicity(Q, point)
        return _poly_eval(P, point) * point**low / _poly_eval(Q, point)

    def as_monomial(self) -> tuple[Scalar, int] | None:
        """(c, k), если f = c·X^k."""
        if len(self.numerator) == 1 and set(self.denominator) == {0}:
            ((exponent, coeff),) = self.numerator.items()
            return coeff, exponent
        return None

    # ---- сравнение и вывод ----

    def __eq__(self, other) -> bool:
        if isinstance(other, (Scalar, int, Fraction)):
            other = RatFunc.constant(self.q, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (
            self.q == other.q
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.q,
                frozenset(self.numerator.items()),
                frozenset(self.denominator.items()),
            )
        )

    @staticmethod
    def _render(poly: dict) -> str:
        parts = []
        for k in sorted(poly):
            coeff = f"({poly[k]})"
            parts.append(coeff if k == 0 else f"{coeff}·X^{k}")
        return " + ".join(parts) or "0"

    def __str__(self) -> str:
        if set(self.denominator) == {0}:
            return self._render(self.numerator)
        return f"[{self._render(self.numerator)}] / [{self._render(self.denominator)}]"

    def __repr__(self) -> str:
        return f"RatFunc(q={self.q}, {self})"

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "numerator": [[k, self.numerator[k].to_json()] for k in sorted(self.numerator)],
            "denominator": [
                [k, self.denominator[k].to_json()] for k in sorted(self.denominator)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> RatFunc:
        q = data["q"]
        return cls(
            q,
            {k: Scalar.from_json(c) for k, c in data["numerator"]},
            {k: Scalar.from_json(c) for k, c in data["denominator"]},
        )
