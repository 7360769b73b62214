# -------------------------
#    p-адические константы
# -------------------------

MIN_PRIME: int = 2
MAX_PRIME: int = 997
SIGNS: tuple[int, int] = (1, -1)

# Сколько цифр единицы нужно, чтобы определить класс квадратов
SQUARE_CLASS_DIGITS_ODD: int = 1
SQUARE_CLASS_DIGITS_TWO: int = 3

# Глубина подъема Гензеля в оракуле символа Гильберта
HILBERT_ORACLE_LIFT_ODD: int = 3
HILBERT_ORACLE_LIFT_TWO: int = 5

# -------------------------
#    Константы скаляров
# -------------------------

# Порядок 2-части кругового поля никогда не опускается ниже 8
MIN_TWO_POWER: int = 3
FLOAT_TOLERANCE: float = 1e-9

# -------------------------
#   Константы интегралов
# -------------------------

MIN_RANK_L: int = 2
MAX_BRUTE_FORCE_RANK_L: int = 3
MIN_BRUTE_FORCE_DEPTH: int = 4
MIN_SPLITTING_DEPTH: int = 4

# Профили 𝒩 = (1+𝔭^a, 𝔭^b; 𝔭^c, 1+𝔭^d)
NEIGHBOURHOOD_ODD: tuple[int, int, int, int] = (1, 1, 2, 1)
NEIGHBOURHOOD_TWO: tuple[int, int, int, int] = (3, 2, 3, 3)

# -------------------------
#   Константы параметров
# -------------------------

# Постоянная Ленглендса не вычисляется и переносится как символ
LAMBDA_TOKEN: str = "λ_{E/F}(ψ_α)^{-1}"
MONOMIAL_READING: str = "monomial"
COEFFICIENT_READING: str = "coefficient"
DELTA_READINGS: tuple[str, str] = (MONOMIAL_READING, COEFFICIENT_READING)
PARAMETER_RANKS: tuple[int, ...] = (2, 3, 4)
