import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from characters.tame import TameCharacter
from core.constants.arithmetic import LAMBDA_TOKEN
from core.suites import SuiteResult
from langlands.parameter import ParamRecord, build_parameter, tau_alpha
from scalars.ratfunc import RatFunc
from shimura.gamma import expected_trivial_gamma
from shimura.params import SSParams


def run_json(name, **options):
    out = StringIO()
    call_command(name, format="json", stdout=out, **options)
    return json.loads(out.getvalue())


def test_gamma_matches_trivial_closed_form():
    document = run_json("gamma", p=3, l=2)
    assert document["passed"]
    expected = expected_trivial_gamma(SSParams(3, 2))
    assert RatFunc.from_json(document["exact"]["gamma"]) == expected
    assert set(document["float"]) == {"gamma", "local_coefficient", "expected"}
    assert document["timing"] is None


def test_gamma_for_quadratic_tau_has_no_expected_value():
    document = run_json("gamma", p=5, l=3, tau_residue_exp=2, tau_zeta_exp=4)
    assert document["passed"]
    assert "expected" not in document["exact"]
    assert document["inputs"]["tau_residue_exp"] == 2


def test_gamma_text_output():
    out = StringIO()
    call_command("gamma", p=5, alpha=2, omega_sign=-1, stdout=out)
    text = out.getvalue()
    assert "Команда: gamma" in text
    assert "Итог: PASS" in text


def test_gamma_timing():
    document = run_json("gamma", p=3, timing=True)
    assert document["timing"]["total"] >= 0


def test_json_output_is_deterministic():
    first, second = StringIO(), StringIO()
    call_command("gamma", p=7, l=2, format="json", stdout=first)
    call_command("gamma", p=7, l=2, format="json", stdout=second)
    assert first.getvalue() == second.getvalue()


@pytest.mark.parametrize(
    "name, options",
    [
        ("gamma", {"p": 9}),
        ("gamma", {"p": 2, "alpha": 3}),
        ("gamma", {"p": 5, "l": 1}),
        ("pole_scan", {"p": 2}),
        ("parameter", {"p": 2}),
        ("oracle", {"p": 3, "depth": 2}),
        ("verify", {}),
        ("q2", {"p": 3}),
    ],
)
def test_invalid_options(name, options):
    with pytest.raises(CommandError):
        call_command(name, stdout=StringIO(), **options)


def test_pole_scan():
    document = run_json("pole_scan", p=3)
    assert document["passed"]
    assert len(document["exact"]["candidates"]) == 4
    assert TameCharacter.from_json(document["exact"]["pole"]) == tau_alpha(SSParams(3, 2))


def test_parameter():
    document = run_json("parameter", p=5, l=2, alpha=2, omega_sign=-1)
    record = build_parameter(SSParams(5, 2, 2, -1))
    assert document["passed"]
    assert document["tokens"] == [LAMBDA_TOKEN]
    assert ParamRecord.from_json(document["exact"]["record"]) == record


def test_q2_defaults_to_two():
    document = run_json("q2", tau_zeta_exp=3)
    assert document["passed"]
    assert document["inputs"]["p"] == 2
    exact = document["exact"]
    assert RatFunc.from_json(exact["gamma"]) == RatFunc.from_json(exact["expected"])


def test_verify_hilbert():
    document = run_json("verify", suite="hilbert")
    assert document["passed"]
    assert [row["name"] for row in document["suite_results"]] == ["hilbert"]
    assert document["suite_results"][0]["checked"] > 0


def test_verify_failure_exit_code(monkeypatch):
    def failing(name, seed=None):
        result = SuiteResult(name)
        result.expect(False, law="forced")
        return result

    monkeypatch.setattr("core.management.commands.verify.run_suite", failing)
    out = StringIO()
    with pytest.raises(CommandError) as error:
        call_command("verify", suite="gauss", format="json", stdout=out)
    assert error.value.returncode == 1
    document = json.loads(out.getvalue())
    assert not document["passed"]
    assert document["suite_results"][0]["first_counterexample"] == {"law": "forced"}


def test_oracle_reports_timing():
    document = run_json("oracle", p=3, tau_zeta_exp=1)
    assert document["passed"]
    exact = document["exact"]
    assert RatFunc.from_json(exact["plain_closed"]) == RatFunc.from_json(exact["plain_brute_force"])
    assert set(document["timing"]) == {"plain", "intertwined", "total"}
    assert document["inputs"]["depth"] is None


def test_report_written_to_directory(settings, tmp_path):
    settings.REPORT_OUTPUT_DIR = str(tmp_path)
    document = run_json("gamma", p=3, tau_zeta_exp=2)
    (path,) = tmp_path.iterdir()
    assert path.name.startswith("gamma-")
    assert json.loads(path.read_text(encoding="utf-8")) == document


def test_uniformizer_unit_flows_to_tau():
    document = run_json("gamma", p=7, uniformizer_unit=2)
    assert document["passed"]
    assert document["inputs"]["uniformizer_unit"] == 2
    exact = document["exact"]
    assert RatFunc.from_json(exact["gamma"]) == RatFunc.from_json(exact["expected"])
