from core.constants.arithmetic import MIN_BRUTE_FORCE_DEPTH
from core.management.base import ReportCommand
from core.reports import Payload
from shimura.oracle import compare_with_closed
from shimura.params import SectionData


class Command(ReportCommand):
    help = "Прямое суммирование Ψ(W, φ, f_s) и Ψ(W, φ, M(τ, s)f_s) против замкнутых форм"
    command_name = "oracle"
    defaults = {"timing": True}

    def run(self, config):
        params, tau = config.params(), config.tau()
        data = SectionData.build(params, tau, config.psi())
        depth = config.depth or MIN_BRUTE_FORCE_DEPTH + (params.p == 2)
        payload = Payload(timing={})
        for intertwined in (False, True):
            key = "intertwined" if intertwined else "plain"
            report = compare_with_closed(params, data, depth, intertwined)
            payload.add_ratfunc(f"{key}_closed", report.closed)
            payload.add_ratfunc(f"{key}_brute_force", report.brute_force)
            payload.timing[key] = round(report.seconds, 3)
            payload.expect(report.matched, f"{key}: D = {depth}, Ψ = {report.closed}")
        return payload
