import hashlib
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from django.conf import settings

from api.v1.serializers import ReportSerializer
from core.constants.reports import FLOAT_DIGITS, REPORT_SCHEMA_VERSION
from core.report_messages import render_text

logger = logging.getLogger(__name__)


def float_scalar(value):
    """Приближение скаляра {re, im}, округленное до FLOAT_DIGITS знаков."""
    z = complex(value.embed_float())
    return {
        "re": round(z.real, FLOAT_DIGITS) + 0.0,
        "im": round(z.imag, FLOAT_DIGITS) + 0.0,
    }


def float_ratfunc(value):
    """Приближение рациональной функции по коэффициентам при X^k."""
    return {
        "numerator": [[k, float_scalar(c)] for k, c in sorted(value.numerator.items())],
        "denominator": [[k, float_scalar(c)] for k, c in sorted(value.denominator.items())],
    }


@dataclass
class Payload:
    """
    Результат одной команды до оформления в отчет.

    Attributes:
        exact (dict): Точные значения в JSON-формах.
        floats (dict): Приближения для тех же ключей.
        tokens (list[str]): Невычисляемые множители.
        suite_results (list[dict]): Итоги наборов проверок.
        passed (bool): Общий итог.
        lines (list[str]): Дополнительные строки текстового вывода.
        timing (dict | None): Время отдельных этапов.
    """

    exact: dict = field(default_factory=dict)
    floats: dict = field(default_factory=dict)
    tokens: list = field(default_factory=list)
    suite_results: list = field(default_factory=list)
    passed: bool = True
    lines: list = field(default_factory=list)
    timing: dict | None = None

    def add_scalar(self, key, value):
        self.exact[key] = value.to_json()
        self.floats[key] = float_scalar(value)

    def add_ratfunc(self, key, value):
        self.exact[key] = value.to_json()
        self.floats[key] = float_ratfunc(value)

    def add_suite(self, result):
        self.suite_results.append(result.as_dict())
        self.passed = self.passed and result.passed

    def add_token(self, token):
        if token not in self.tokens:
            self.tokens.append(token)

    def expect(self, condition, message):
        """Записывает строку проверки; ложное условие проваливает отчет."""
        self.lines.append(f"{'OK' if condition else 'FAIL'}: {message}")
        self.passed = self.passed and bool(condition)
        return condition

    def fail(self, counterexample):
        self.passed = False
        self.exact["counterexample"] = counterexample


def canonical_json(value):
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def inputs_digest(inputs):
    return hashlib.sha256(canonical_json(inputs).encode("utf-8")).hexdigest()


def build_report(command, inputs, payload, timing=None):
    """
    Собирает и проверяет JSON-документ отчета.
    Args:
        command (str): Имя команды.
        inputs (dict): RunConfig.inputs().
        payload (Payload): Результат команды.
        timing (dict | None): Время счета; только с флагом --timing.
    Returns:
        dict: Документ по core.schemas.REPORT_SCHEMA.
    Raises:
        ValidationError: Если документ не проходит ReportSerializer.
    """

    document = {
        "schema": REPORT_SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "exact": payload.exact,
        "float": payload.floats,
        "tokens": payload.tokens,
        "timing": timing,
        "suite_results": payload.suite_results,
        "passed": payload.passed,
    }
    ReportSerializer(data=document).is_valid(raise_exception=True)
    return document


def render(document, fmt, lines=()):
    if fmt == "json":
        return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False)
    return render_text(document, lines)


def write_report(document):
    """
    Сохраняет JSON-отчет в REPORT_OUTPUT_DIR, если каталог задан.
    Имя файла детерминировано: команда и хеш входных данных.
    Returns:
        Path | None: Путь к файлу.
    """

    if not settings.REPORT_OUTPUT_DIR:
        return None
    directory = Path(settings.REPORT_OUTPUT_DIR)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{document['command']}-{inputs_digest(document['inputs'])[:12]}.json"
    path.write_text(render(document, "json") + "\n", encoding="utf-8")
    logger.info(f"Отчет записан в {path}")
    return path
