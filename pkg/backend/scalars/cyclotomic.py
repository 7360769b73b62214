from __future__ import annotations

import cmath
import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from sympy import QQ, Poly, Rational, cyclotomic_poly, integer_nthroot, legendre_symbol, symbols
from sympy import multiplicity

from core.constants.arithmetic import MIN_TWO_POWER

_X = symbols("x")


def _odd_prime(q: int) -> int | None:
    return q if q % 2 else None


@lru_cache(maxsize=None)
def _odd_expansion(ell: int, level: int, j: int) -> tuple[tuple[int, int], ...]:
    """ζ^j в базисе ζ^0..ζ^{φ(ℓ^b)−1} поля ℚ(ζ_{ℓ^b})."""
    block = ell ** (level - 1)
    phi = (ell - 1) * block
    if j < phi:
        return ((j, 1),)
    r = j - phi
    return tuple((r + t * block, -1) for t in range(ell - 1))


def _split_exponent(k: int, two: int, odd: int, ell: int | None) -> tuple[int, int]:
    """ζ_n^k = ζ_{2^a}^i · ζ_{ℓ^b}^j по китайской теореме об остатках."""
    n1 = 1 << two
    n2 = ell**odd if odd else 1
    i = k * pow(n2, -1, n1) % n1
    j = k * pow(n1, -1, n2) % n2 if n2 > 1 else 0
    return i, j


class Scalar:
    """
    Точный элемент ℚ(ζ_n)[√q].

    Элемент хранится в тензорном базисе ℚ(ζ_{2^a}) ⊗ ℚ(ζ_{ℓ^b}) ⊗ {1, √q}:
    ключ (i, j, e) означает ζ_{2^a}^i·ζ_{ℓ^b}^j·(√q)^e, где i < 2^{a−1},
    j < φ(ℓ^b), e ∈ {0, 1}. После каждой операции уровни (a, b)
    опускаются до минимальных, поэтому запись канонична.

    √q формален: равенство, хеш и обращение сводятся к специализации
    √q ↦ элемент ℚ(ζ_{4q}) (сумма Гаусса), запись же хранит √q отдельно.
    """

    __slots__ = ("q", "two", "odd", "terms", "_special")

    def __init__(self, q: int, terms=None, two: int = MIN_TWO_POWER, odd: int = 0):
        self.q = q
        self.two = two
        self.odd = odd
        self.terms = dict(terms or {})
        self._special = None

    # ---- служебное ----

    @property
    def ell(self) -> int | None:
        return _odd_prime(self.q)

    @property
    def order(self) -> int:
        """n = 2^a·ℓ^b текущего кругового поля."""
        return (1 << self.two) * (self.ell**self.odd if self.odd else 1)

    @classmethod
    def _from_raw(cls, q, two, odd, items) -> Scalar:
        """Собирает элемент из неприведенных слагаемых (i, j, e, c)."""
        ell = _odd_prime(q)
        n1 = 1 << two
        half = n1 >> 1
        n2 = ell**odd if odd else 1
        acc = defaultdict(Fraction)
        for i, j, e, coeff in items:
            if not coeff:
                continue
            i %= n1
            if i >= half:
                i -= half
                coeff = -coeff
            if e < 0 or e > 1:
                coeff = coeff * Fraction(q) ** (e // 2)
                e %= 2
            if odd:
                for jj, sign in _odd_expansion(ell, odd, j % n2):
                    acc[(i, jj, e)] += sign * coeff
            else:
                acc[(i, 0, e)] += coeff
        return cls._lowered(q, two, odd, {k: c for k, c in acc.items() if c})

    @classmethod
    def _lowered(cls, q, two, odd, terms) -> Scalar:
        ell = _odd_prime(q)
        if not terms:
            return cls(q)
        while two > MIN_TWO_POWER and all(i % 2 == 0 for i, _, _ in terms):
            terms = {(i // 2, j, e): c for (i, j, e), c in terms.items()}
            two -= 1
        while odd > 1 and all(j % ell == 0 for _, j, _ in terms):
            terms = {(i, j // ell, e): c for (i, j, e), c in terms.items()}
            odd -= 1
        if odd == 1 and all(j == 0 for _, j, _ in terms):
            odd = 0
        return cls(q, terms, two, odd)

    def _lifted(self, two: int, odd: int) -> dict:
        if two == self.two and odd == self.odd:
            return self.terms
        di = 1 << (two - self.two)
        dj = self.ell ** (odd - self.odd) if odd > self.odd and self.odd else 1
        return {(i * di, j * dj, e): c for (i, j, e), c in self.terms.items()}

    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.q != self.q:
                raise ValueError(f"Cannot mix scalars over q={self.q} and q={other.q}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.rational(self.q, other)
        return NotImplemented

    # ---- конструкторы ----

    @classmethod
    def zero(cls, q: int) -> Scalar:
        return cls(q)

    @classmethod
    def rational(cls, q: int, value) -> Scalar:
        value = Fraction(value)
        return cls(q, {(0, 0, 0): value} if value else {})

    @classmethod
    def one(cls, q: int) -> Scalar:
        return cls.rational(q, 1)

    @classmethod
    def sqrt_q(cls, q: int) -> Scalar:
        return cls(q, {(0, 0, 1): Fraction(1)})

    @classmethod
    def q_power(cls, q: int, half_exponent: int) -> Scalar:
        """q^{h/2} с формальным √q при нечетном h."""
        whole, odd_part = divmod(half_exponent, 2)
        return cls(q, {(0, 0, odd_part): Fraction(q) ** whole})

    @classmethod
    def from_phases(cls, q: int, phases) -> Scalar:
        """
        Σ c_r·e(r) по отображению {доля оборота r: коэффициент c_r}.

        Raises:
            ValueError: Если знаменатель r не вида 2^s·ℓ^t.
        """
        ell = _odd_prime(q)
        items = []
        two, odd = MIN_TWO_POWER, 0
        for phase, coeff in phases.items():
            if not coeff:
                continue
            phase = Fraction(phase) % 1
            den = phase.denominator
            s = int(multiplicity(2, den)) if den % 2 == 0 else 0
            t = int(multiplicity(ell, den)) if ell and den % ell == 0 else 0
            if den != 2**s * (ell**t if t else 1):
                raise ValueError(f"e({phase}) is not a root of unity of order 2^s·{q}^t")
            two, odd = max(two, s), max(odd, t)
            items.append((phase, Fraction(coeff)))
        n = (1 << two) * (ell**odd if odd else 1)
        raw = []
        for phase, coeff in items:
            i, j = _split_exponent(int(phase * n), two, odd, ell)
            raw.append((i, j, 0, coeff))
        return cls._from_raw(q, two, odd, raw)

    @classmethod
    def from_phase(cls, q: int, phase, coeff=1) -> Scalar:
        return cls.from_phases(q, {Fraction(phase): coeff})

    @classmethod
    def root_of_unity(cls, q: int, n: int, k: int) -> Scalar:
        """ζ_n^k."""
        return cls.from_phase(q, Fraction(k, n))

    @classmethod
    def sum(cls, q: int, scalars) -> Scalar:
        """Сумма многих элементов за один проход."""
        scalars = [s for s in scalars if s.terms]
        if not scalars:
            return cls(q)
        two = max(s.two for s in scalars)
        odd = max(s.odd for s in scalars)
        acc = defaultdict(Fraction)
        for s in scalars:
            if s.q != q:
                raise ValueError(f"Cannot mix scalars over q={q} and q={s.q}")
            for key, coeff in s._lifted(two, odd).items():
                acc[key] += coeff
        return cls._lowered(q, two, odd, {k: c for k, c in acc.items() if c})

    # ---- кольцевые операции ----

    def __add__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Scalar.sum(self.q, [self, other])

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(self.q, {k: -c for k, c in self.terms.items()}, self.two, self.odd)

    def __sub__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Scalar:
        return (-self) + other

    def __mul__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return Scalar(self.q)
        two = max(self.two, other.two)
        odd = max(self.odd, other.odd)
        left = self._lifted(two, odd)
        right = other._lifted(two, odd)
        raw = [
            (i1 + i2, j1 + j2, e1 + e2, c1 * c2)
            for (i1, j1, e1), c1 in left.items()
            for (i2, j2, e2), c2 in right.items()
        ]
        return Scalar._from_raw(self.q, two, odd, raw)

    __rmul__ = __mul__

    def conj(self) -> Scalar:
        """ζ ↦ ζ^{−1}, √q неподвижен."""
        raw = [(-i, -j, e, c) for (i, j, e), c in self.terms.items()]
        return Scalar._from_raw(self.q, self.two, self.odd, raw)

    def split_sqrt(self) -> tuple[Scalar, Scalar]:
        """z = z₀ + z₁√q, z₀ и z₁ без √q."""
        parts = ({}, {})
        for (i, j, e), c in self.terms.items():
            parts[e][(i, j, 0)] = c
        return (
            Scalar._lowered(self.q, self.two, self.odd, parts[0]),
            Scalar._lowered(self.q, self.two, self.odd, parts[1]),
        )

    def specialized(self) -> Scalar:
        """Тот же элемент с √q, замененным круговым выражением."""
        if self._special is None:
            if all(e == 0 for _, _, e in self.terms):
                self._special = self
            else:
                z0, z1 = self.split_sqrt()
                self._special = z0 + z1 * _cyclotomic_sqrt(self.q)
        return self._special

    def _monomial_inverse(self) -> Scalar:
        ((i, j, e), c), = self.terms.items()
        coeff = 1 / c / (self.q if e else 1)
        return Scalar._from_raw(self.q, self.two, self.odd, [(-i, -j, e, coeff)])

    def inverse(self) -> Scalar:
        """
        Обратный элемент.

        Мономы обращаются формально; z₀ + z₁√q — через сопряжение √q ↦ −√q
        и обращение нормы z₀² − q·z₁² по модулю кругового многочлена.

        Raises:
            ZeroDivisionError: Для нуля.
        """
        if self.is_zero:
            raise ZeroDivisionError("inversion of the zero scalar")
        if len(self.terms) == 1:
            return self._monomial_inverse()
        z0, z1 = self.split_sqrt()
        if not z1.terms:
            return _cyclotomic_inverse(z0)
        norm = z0 * z0 - z1 * z1 * self.q
        if norm.is_zero:
            return _cyclotomic_inverse(self.specialized())
        return (z0 - z1 * Scalar.sqrt_q(self.q)) * _cyclotomic_inverse(norm)

    def __truediv__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> Scalar:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> Scalar:
        base = self if exponent >= 0 else self.inverse()
        result = Scalar.one(self.q)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    # ---- сравнение ----

    @property
    def is_zero(self) -> bool:
        return not self.specialized().terms

    def __bool__(self) -> bool:
        return not self.is_zero

    def _canonical_key(self):
        special = self.specialized()
        return special.two, special.odd, frozenset(special.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.rational(self.q, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.q != self.q:
            return False
        if self.terms == other.terms and self.two == other.two and self.odd == other.odd:
            return True
        return self._canonical_key() == other._canonical_key()

    def __hash__(self) -> int:
        return hash((self.q, self._canonical_key()))

    # ---- числовые характеристики ----

    def as_rational(self) -> Fraction | None:
        special = self.specialized()
        if not special.terms:
            return Fraction(0)
        if set(special.terms) == {(0, 0, 0)}:
            return special.terms[(0, 0, 0)]
        return None

    def abs_squared(self) -> Scalar:
        return self * self.conj()

    def exact_abs(self) -> Scalar:
        """
        |z| как элемент ℚ(√q).

        Raises:
            ValueError: Если |z|² не является квадратом в ℚ(√q)_{>0}.
        """
        value = self.abs_squared().as_rational()
        if value is None or value < 0:
            raise ValueError(f"|z|^2 of {self} is not a nonnegative rational")
        for scale, half in ((1, 0), (self.q, 1)):
            num, exact_num = integer_nthroot(value.numerator * scale, 2)
            den, exact_den = integer_nthroot(value.denominator, 2)
            if exact_num and exact_den:
                return Scalar.rational(self.q, Fraction(int(num), int(den) * scale)) * (
                    Scalar.sqrt_q(self.q) if half else 1
                )
        raise ValueError(f"|z| of {self} does not lie in Q(sqrt {self.q})")

    def is_unimodular(self) -> bool:
        return self.abs_squared() == 1

    def root_of_unity_exponent(self, n: int) -> int | None:
        """k с z = ζ_n^k, либо None."""
        for k in range(n):
            if self == Scalar.root_of_unity(self.q, n, k):
                return k
        return None

    def embed_float(self) -> complex:
        """Комплексное приближение; только для отчетов."""
        n1 = 1 << self.two
        n2 = self.ell**self.odd if self.odd else 1
        root = math.sqrt(self.q)
        return sum(
            float(c) * cmath.exp(2j * cmath.pi * (i / n1 + j / n2)) * root**e
            for (i, j, e), c in self.terms.items()
        )

    # ---- представление ----

    def power_coefficients(self) -> list[list[int]]:
        """[[k, e, num, den], ...] в базисе ζ_n^k·√q^e."""
        n1 = 1 << self.two
        n2 = self.order // n1
        rows = [
            [(i * n2 + j * n1) % self.order, e, c.numerator, c.denominator]
            for (i, j, e), c in self.terms.items()
        ]
        return sorted(rows)

    def to_json(self) -> dict:
        return {"n": self.order, "q": self.q, "coeffs": self.power_coefficients()}

    @classmethod
    def from_json(cls, data: dict) -> Scalar:
        q, n = data["q"], data["n"]
        ell = _odd_prime(q)
        two = int(multiplicity(2, n))
        odd = int(multiplicity(ell, n)) if ell and n % ell == 0 else 0
        raw = []
        for k, e, num, den in data["coeffs"]:
            i, j = _split_exponent(k, two, odd, ell)
            raw.append((i, j, e, Fraction(num, den)))
        return cls._from_raw(q, two, odd, raw)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, e, num, den in self.power_coefficients():
            coeff = f"{num}/{den}" if den != 1 else str(num)
            factors = [coeff]
            if k:
                factors.append(f"ζ_{self.order}^{k}")
            if e:
                factors.append(f"√{self.q}")
            parts.append("·".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Scalar(q={self.q}, {self})"


@lru_cache(maxsize=None)
def _cyclotomic_sqrt(q: int) -> Scalar:
    """√q в ℚ(ζ_8) для q = 2 и через сумму Гаусса для нечетного q."""
    if q == 2:
        return Scalar.from_phases(q, {Fraction(1, 8): 1, Fraction(3, 8): -1})
    gauss = Scalar.from_phases(q, {Fraction(x, q): int(legendre_symbol(x, q)) for x in range(1, q)})
    if q % 4 == 1:
        return gauss
    return gauss * Scalar.from_phase(q, Fraction(3, 4))


def _cyclotomic_inverse(z: Scalar) -> Scalar:
    """Обращение в ℚ(ζ_n) через многочлены по модулю Φ_n."""
    n = z.order
    n1 = 1 << z.two
    n2 = n // n1
    coeffs = defaultdict(Fraction)
    for (i, j, _), c in z.terms.items():
        coeffs[(i * n2 + j * n1) % n] += c
    poly = Poly.from_dict(
        {(k,): Rational(c.numerator, c.denominator) for k, c in coeffs.items() if c},
        _X,
        domain=QQ,
    )
    modulus = Poly(cyclotomic_poly(n, _X), _X, domain=QQ)
    inverse = poly.invert(modulus)
    raw = []
    for (k,), c in inverse.terms():
        c = Rational(c)
        i, j = _split_exponent(k, z.two, z.odd, z.ell)
        raw.append((i, j, 0, Fraction(int(c.p), int(c.q))))
    return Scalar._from_raw(z.q, z.two, z.odd, raw)
