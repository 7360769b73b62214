from django.core.exceptions import ValidationError
from sympy import isprime

from core.constants.arithmetic import (
    MAX_PRIME,
    MIN_BRUTE_FORCE_DEPTH,
    MIN_RANK_L,
    SIGNS,
)


def validate_prime(value):
    """
    Валидирует простое число p.

    Параметры:
    value (int): Характеристика поля вычетов ℚ_p.

    Исключения:
    ValidationError: Вызывается, если значение не простое или больше
    допустимого MAX_PRIME.

    Примеры:
    - Правильные значения: 2, 3, 5, 97
    - Неправильные значения: 1, 4, 1009
    """
    if not isprime(value) or value > MAX_PRIME:
        raise ValidationError(f"p = {value} должно быть простым и не больше {MAX_PRIME}!")


def validate_sign(value):
    """
    Валидирует знак ±1.

    Параметры:
    value (int): ω(−I), знак характера ψ или знак β_ψ.

    Исключения:
    ValidationError: Вызывается, если значение не равно 1 или −1.
    """
    if value not in SIGNS:
        raise ValidationError("Знак должен быть равен 1 или -1!")


def validate_unit(value, p):
    """
    Валидирует целое число как p-адическую единицу.

    Исключения:
    ValidationError: Вызывается, если p делит значение.
    """
    if value % p == 0:
        raise ValidationError(f"{value} не является единицей в ℤ_{p}!")


def validate_rank(value):
    """Ранг l группы Sp(2l) не меньше 2."""
    if value < MIN_RANK_L:
        raise ValidationError(f"l должно быть не меньше {MIN_RANK_L}!")


def validate_depth(value):
    """Глубина сеток прямого суммирования."""
    if value < MIN_BRUTE_FORCE_DEPTH:
        raise ValidationError(
            f"Глубина должна быть не меньше {MIN_BRUTE_FORCE_DEPTH}!"
        )
