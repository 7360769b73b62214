from core.management.base import ReportCommand
from core.reports import Payload
from shimura.gamma import pole_scan


class Command(ReportCommand):
    help = "Поиск единственного квадратичного τ с полюсом γ(s, π × τ, ψ) в s = 1"
    command_name = "pole_scan"

    def run(self, config):
        report = pole_scan(config.params(), config.psi())
        payload = Payload()
        data = report.as_dict()
        payload.exact["candidates"] = data["candidates"]
        payload.exact["pole"] = data["pole"]
        payload.exact["zero"] = data["zero"]
        payload.add_scalar("pole_value", report.pole.value_on_uniformizer)
        for row in report.candidates:
            if row["order"] < 0:
                status = "полюс"
            elif row["canceled"]:
                status = "полюс γ(1, τ², ψ₂) сокращен"
            else:
                status = "без полюса"
            payload.lines.append(f"τ = {row['tau']}: порядок {row['order']} ({status})")
        payload.expect(report.pole.is_quadratic, f"полюс при τ = {report.pole}")
        return payload
