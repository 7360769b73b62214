import logging
import time

from django.core.management.base import BaseCommand, CommandError

from api.v1.serializers import RunConfigSerializer
from core.constants.reports import REPORT_FORMATS
from core.exceptions import ArithmeticLibraryError, VerificationError
from core.reports import Payload, build_report, render, write_report

logger = logging.getLogger(__name__)

RUN_OPTIONS = (
    "p",
    "l",
    "alpha",
    "omega_sign",
    "uniformizer_unit",
    "tau_zeta_order",
    "tau_zeta_exp",
    "tau_residue_exp",
    "psi_sign",
    "psi_twist",
    "depth",
    "seed",
    "format",
    "timing",
    "suite",
    "reading",
)


class ReportCommand(BaseCommand):
    """
    Базовая команда: флаги -> RunConfig -> Payload -> отчет.

    Подклассы задают command_name, при необходимости defaults и
    add_command_arguments, и реализуют run(config).
    Код выхода 0 только если все проверки отчета прошли.
    """

    command_name = None
    defaults = {}

    def add_arguments(self, parser):
        parser.add_argument("--p", type=int, help="Простое число p")
        parser.add_argument("--l", type=int, help="Ранг l ≥ 2")
        parser.add_argument("--alpha", type=int, help="Класс α ∈ κ^×/(κ^×)²")
        parser.add_argument("--omega-sign", type=int, help="ω(−I_{2l}) = ±1")
        parser.add_argument("--uniformizer-unit", type=int, help="u в ϖ = p·u")
        parser.add_argument("--tau-zeta-order", type=int, help="n в τ(ϖ) = ζ_n^k")
        parser.add_argument("--tau-zeta-exp", type=int, help="k в τ(ϖ) = ζ_n^k")
        parser.add_argument("--tau-residue-exp", type=int, help="r в τ|κ^× = χ^r")
        parser.add_argument("--psi-sign", type=int, help="Знак в ψ(x) = e(±{x})")
        parser.add_argument("--psi-twist", type=int, help="Единица u в ψ_u(x) = ψ(ux)")
        parser.add_argument("--depth", type=int, help="Глубина прямого суммирования")
        parser.add_argument("--seed", type=int, help="Зерно генератора")
        parser.add_argument("--format", choices=REPORT_FORMATS, help="text или json")
        parser.add_argument(
            "--timing", action="store_true", default=None, help="Писать время счета"
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def get_config(self, options):
        """
        Проверяет флаги через RunConfigSerializer.
        Raises: CommandError со списком ошибок проверки.
        """

        data = {"command": self.command_name, **self.defaults}
        data.update(
            {key: options[key] for key in RUN_OPTIONS if options.get(key) is not None}
        )
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f"Некорректные параметры: {serializer.errors}")
        return serializer.save()

    def run(self, config):
        raise NotImplementedError

    def handle(self, *args, **options):
        config = self.get_config(options)
        started = time.perf_counter()
        try:
            payload = self.run(config)
        except VerificationError as error:
            logger.error(f"{self.command_name}: {error}")
            payload = self.failed_payload(error)
        except ArithmeticLibraryError as error:
            raise CommandError(f"{self.command_name}: {error}")
        seconds = time.perf_counter() - started
        timing = None
        if config.timing:
            timing = {**(payload.timing or {}), "total": round(seconds, 3)}
        document = build_report(self.command_name, config.inputs(), payload, timing)
        self.stdout.write(render(document, config.format, payload.lines))
        write_report(document)
        if not document["passed"]:
            raise CommandError(f"{self.command_name}: проверки не прошли", returncode=1)

    @staticmethod
    def failed_payload(error):
        payload = Payload()
        counterexample = {key: str(value) for key, value in error.counterexample.items()}
        payload.fail({"error": str(error), **counterexample})
        payload.lines.append(f"FAIL: {error}")
        return payload
