REPORT_MARK = "ss-gamma: точные локальные факторы Sp(2l) × GL(1)"

def _format_float(value):
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        return f"{value['re']:+.6f}{value['im']:+.6f}i"
    if isinstance(value, dict) and "numerator" in value:
        numerator = " + ".join(f"({_format_float(c)})·X^{k}" for k, c in value["numerator"]) or "0"
        denominator = " + ".join(f"({_format_float(c)})·X^{k}" for k, c in value["denominator"])
        return f"[{numerator}] / [{denominator}]"
    return str(value)

def render_suite(row):
    """."""
    status = "OK" if row["passed"] else "FAIL"
    message = f"""  [{status}] {row['name']}: проверено {row['checked']}"""
    if row["first_counterexample"]:
        message += f"""
        первый контрпример: {row['first_counterexample']}"""
    return message

def render_text(document, lines=()):
    """Текстовая форма отчета для терминала."""
    inputs = ", ".join(f"{key}={value}" for key, value in sorted(document["inputs"].items()) if value is not None)
    values = "\n".join(f"  {key} ≈ {_format_float(value)}" for key, value in sorted(document["float"].items()))
    suites = "\n".join(render_suite(row) for row in document["suite_results"])
    extra = "\n".join(f"  {line}" for line in lines)
    tokens = ", ".join(document["tokens"]) or "нет"
    timing = ""
    if document.get("timing"):
        timing = "\nВремя: " + ", ".join(f"{key}={value:.2f}s" for key, value in sorted(document["timing"].items()))
    message = f"""{REPORT_MARK}
Команда: {document['command']}
Входные данные: {inputs}
Значения:
{values or '  нет'}
{extra}
Символы: {tokens}
{suites}{timing}
Итог: {'PASS' if document['passed'] else 'FAIL'}"""
    return "\n".join(line for line in message.splitlines() if line.strip())
