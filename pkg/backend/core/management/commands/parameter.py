from api.v1.serializers import ParamRecordSerializer
from core.constants.arithmetic import DELTA_READINGS
from core.management.base import ReportCommand
from core.reports import Payload
from langlands.parameter import build_parameter


class Command(ReportCommand):
    help = "Индуцирующие данные (E, ξ) параметра Ленглендса простого суперкаспидального π"
    command_name = "parameter"

    def add_command_arguments(self, parser):
        parser.add_argument("--reading", choices=DELTA_READINGS, help="Прочтение δ")

    def run(self, config):
        record = build_parameter(config.params(), config.psi(), config.reading)
        payload = Payload()
        payload.exact["record"] = ParamRecordSerializer(record).data
        payload.add_scalar("tau_alpha_on_uniformizer", record.tau_alpha.value_on_uniformizer)
        payload.add_scalar("xi_on_zeta", record.xi_on_zeta.value)
        for token in record.xi_on_zeta.tokens:
            payload.add_token(token)
        payload.lines.append(f"E = {record.extension}")
        payload.lines.append(f"τ_α = {record.tau_alpha}")
        payload.lines.append(f"ξ(ζ) = {record.xi_on_zeta}")
        if not record.induction_applies:
            payload.lines.append("p | l: E/F дико разветвлено, ξ на 1 + 𝔭_E не описан")
        payload.expect(record.readings_agree, "два прочтения δ совпадают")
        return payload
