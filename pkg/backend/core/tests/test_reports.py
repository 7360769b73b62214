import math

import pytest
from rest_framework.exceptions import ValidationError

from core.reports import Payload, build_report, float_ratfunc, float_scalar, render, write_report
from core.suites import SuiteResult
from scalars.cyclotomic import Scalar
from scalars.ratfunc import RatFunc


def test_float_scalar_normalizes_negative_zero():
    value = float_scalar(Scalar.root_of_unity(3, 4, 2))
    assert value == {"re": -1.0, "im": 0.0}
    assert math.copysign(1.0, value["im"]) == 1.0


def test_float_ratfunc_terms_are_sorted():
    f = RatFunc.euler_factor(Scalar.rational(5, 2))
    rendered = float_ratfunc(f)
    exponents = [k for k, _ in rendered["denominator"]]
    assert exponents == sorted(exponents)
    assert rendered["numerator"] == [[0, {"re": 1.0, "im": 0.0}]]


def test_payload_collects_suites():
    payload = Payload()
    failing = SuiteResult("gauss")
    failing.expect(False, law="forced")
    payload.add_suite(SuiteResult("hilbert"))
    payload.add_suite(failing)
    assert not payload.passed
    assert [row["name"] for row in payload.suite_results] == ["hilbert", "gauss"]


def test_build_report_rejects_inconsistent_status():
    payload = Payload()
    failing = SuiteResult("gauss")
    failing.expect(False, law="forced")
    payload.suite_results.append(failing.as_dict())
    with pytest.raises(ValidationError):
        build_report("verify", {"suite": "gauss"}, payload)


def test_render_json_is_sorted():
    payload = Payload()
    payload.add_scalar("value", Scalar.sqrt_q(3))
    payload.add_token("λ")
    document = build_report("gamma", {"p": 3}, payload)
    text = render(document, "json")
    assert text.index('"command"') < text.index('"exact"') < text.index('"float"')
    assert "λ" in text


def test_render_text():
    payload = Payload()
    payload.expect(True, "проверка")
    document = build_report("gamma", {"p": 3, "depth": None}, payload, timing={"total": 0.5})
    text = render(document, "text", payload.lines)
    assert "Входные данные: p=3" in text
    assert "OK: проверка" in text
    assert "total=0.50s" in text
    assert text.endswith("Итог: PASS")


def test_write_report_needs_directory(settings):
    settings.REPORT_OUTPUT_DIR = None
    document = build_report("gamma", {"p": 3}, Payload())
    assert write_report(document) is None
