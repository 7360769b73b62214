import logging
import random
from dataclasses import dataclass, field

from django.conf import settings
from django.utils.module_loading import autodiscover_modules

from core.exceptions import VerificationError

logger = logging.getLogger(__name__)

SUITES = {}


@dataclass
class SuiteResult:
    """
    Итог одного набора проверок.

    Attributes:
        name (str): Имя набора.
        checked (int): Сколько тождеств проверено.
        failures (list[dict]): Контрпримеры (первый — самый ранний).
        details (dict): Дополнительные сведения для отчета.
    """

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def expect(self, condition, **counterexample):
        self.checked += 1
        if not condition:
            self.failures.append({key: str(value) for key, value in counterexample.items()})
        return condition

    def as_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "first_counterexample": self.failures[0] if self.failures else None,
            "details": self.details,
        }


def register_suite(name):
    """Декоратор: регистрирует функцию (rng) -> SuiteResult под именем name."""

    def decorator(func):
        SUITES[name] = func
        return func

    return decorator


def load_suites():
    autodiscover_modules("suites")
    return SUITES


def run_suite(name, seed=None):
    """
    Запускает набор проверок с детерминированным генератором.

    Raises:
        KeyError: Если набор не зарегистрирован.
    """
    suites = load_suites()
    rng = random.Random(settings.RANDOM_SEED if seed is None else seed)
    logger.info(f"Запуск набора проверок {name}")
    try:
        result = suites[name](rng)
    except VerificationError as error:
        result = SuiteResult(name)
        result.checked += 1
        result.failures.append(error.counterexample or {"error": str(error)})
    logger.info(f"Набор {name}: {'OK' if result.passed else 'FAIL'} ({result.checked})")
    return result
