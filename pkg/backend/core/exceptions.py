class ArithmeticLibraryError(Exception):
    """Базовое исключение вычислительного ядра."""


class PrecisionError(ArithmeticLibraryError):
    """Точность или бюджет глубины исчерпаны."""


class NonStabilizationError(ArithmeticLibraryError):
    """Экспоненциальная сумма не стабилизировалась в пределах бюджета."""


class UnsupportedCaseError(ArithmeticLibraryError):
    """Входные данные вне семейства, для которого есть замкнутая формула."""


class VerificationError(ArithmeticLibraryError):
    """
    Расхождение двух независимых вычислений.

    Attributes:
        counterexample (dict): Первый найденный контрпример в виде,
            пригодном для JSON-отчета.
    """

    def __init__(self, message, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample or {}
