from core.management.base import ReportCommand
from core.reports import Payload
from shimura.gamma import expected_trivial_gamma, expected_two_adic_gamma, gamma_assemble
from shimura.params import SectionData
from tate.factors import local_coefficient


class Command(ReportCommand):
    help = "Точный γ(s, π × τ, ψ) и локальный коэффициент C(s, τ, ψ_α)"
    command_name = "gamma"

    def run(self, config):
        params, tau, psi = config.params(), config.tau(), config.psi()
        payload = Payload()
        gamma = gamma_assemble(params, tau, psi)
        payload.add_ratfunc("gamma", gamma)
        twisted = SectionData.build(params, tau, psi).psi
        payload.add_ratfunc("local_coefficient", local_coefficient(tau, twisted))
        payload.lines.append(f"γ(s, {params} × {tau}, {psi}) = {gamma}")
        if params.p == 2:
            expected = expected_two_adic_gamma(tau)
        elif tau.is_trivial:
            expected = expected_trivial_gamma(params, psi)
        else:
            return payload
        payload.add_ratfunc("expected", expected)
        payload.expect(gamma == expected, f"замкнутая форма {expected}")
        return payload
