from functools import lru_cache

from sympy import legendre_symbol

from core.constants.arithmetic import SQUARE_CLASS_DIGITS_ODD, SQUARE_CLASS_DIGITS_TWO
from padic.numbers import PAdic


def legendre(u, p):
    """Символ Лежандра (u/p) как int."""
    return int(legendre_symbol(u, p))


@lru_cache(maxsize=None)
def least_nonresidue(p):
    """Наименьший положительный квадратичный невычет u₀ по модулю нечетного p."""
    return next(u for u in range(2, p) if legendre(u, p) == -1)


def class_digits(p):
    """Сколько цифр единицы определяют класс квадратов."""
    return SQUARE_CLASS_DIGITS_TWO if p == 2 else SQUARE_CLASS_DIGITS_ODD


def square_class_key(a):
    """
    Ключ класса квадратов (v mod 2, r), где r — канонический вычет единицы.

    Для нечетного p r ∈ {1, u₀}, для p = 2 r ∈ {1, 3, 5, 7}.

    Raises:
        ZeroDivisionError: Для нуля.
    """
    if a.is_zero:
        raise ZeroDivisionError("zero has no square class")
    p = a.p
    residue = a.unit_residue(class_digits(p))
    if p != 2 and legendre(residue, p) == 1:
        residue = 1
    elif p != 2:
        residue = least_nonresidue(p)
    return a.valuation % 2, residue


def key_to_int(p, key):
    parity, residue = key
    return residue * p**parity


def square_class(a):
    """Канонический представитель класса a·(F^×)² среди {1, u₀, p, u₀p} или восьми классов ℚ₂^×."""
    return PAdic.from_int(a.p, key_to_int(a.p, square_class_key(a)))


@lru_cache(maxsize=None)
def class_keys(p):
    residues = (1, 3, 5, 7) if p == 2 else (1, least_nonresidue(p))
    return tuple((parity, r) for parity in (0, 1) for r in residues)


def class_representatives(p):
    return [PAdic.from_int(p, key_to_int(p, key)) for key in class_keys(p)]


def is_square(a):
    return square_class_key(a) == (0, 1)
