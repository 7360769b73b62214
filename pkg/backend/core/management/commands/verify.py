import time

from core.constants.reports import ALL_SUITES, SUITE_NAMES
from core.management.base import ReportCommand
from core.reports import Payload
from core.suites import run_suite


class Command(ReportCommand):
    help = "Запускает набор проверок; код выхода 0, только если все тождества выполнены"
    command_name = "verify"

    def add_command_arguments(self, parser):
        parser.add_argument("--suite", choices=(*SUITE_NAMES, ALL_SUITES), help="Имя набора")

    def run(self, config):
        names = SUITE_NAMES if config.suite == ALL_SUITES else (config.suite,)
        payload = Payload(timing={})
        for name in names:
            started = time.perf_counter()
            payload.add_suite(run_suite(name, config.seed))
            payload.timing[name] = round(time.perf_counter() - started, 3)
        return payload
