from django.core.management.base import CommandError

from core.management.base import ReportCommand
from core.reports import Payload
from padic.numbers import PAdic
from scalars.cyclotomic import Scalar
from shimura.gamma import expected_two_adic_gamma, gamma_assemble
from tate.suites import two_adic_epsilon_chain


class Command(ReportCommand):
    help = "γ(s, π × τ, ψ) = τ(2)·2^{1/2−s} для единственного π над ℚ_2"
    command_name = "q2"
    defaults = {"p": 2}

    def run(self, config):
        if config.p != 2:
            raise CommandError(f"Команда q2 определена только для p = 2, получено p = {config.p}")
        params, tau, psi = config.params(), config.tau(), config.psi()
        payload = Payload()
        gamma = gamma_assemble(params, tau, psi)
        expected = expected_two_adic_gamma(tau)
        payload.add_ratfunc("gamma", gamma)
        payload.add_ratfunc("expected", expected)
        payload.expect(gamma == expected, f"γ = {expected}")
        chain = two_adic_epsilon_chain(tau(PAdic.from_int(2, 2)) ** 2)
        payload.add_ratfunc("epsilon_chain", chain)
        payload.expect(chain == Scalar.sqrt_q(2), "цепочка ε-множителей равна 2^{1/2}")
        return payload
