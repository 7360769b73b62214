from core.constants.reports import REPORT_SCHEMA_VERSION

EXACT_SCALAR = {
    "type": "object",
    "required": ["n", "q", "coeffs"],
    "properties": {
        "n": {"type": "integer", "description": "Порядок кругового поля ℚ(ζ_n)."},
        "q": {"type": "integer", "description": "Простое число под формальным √q."},
        "coeffs": {
            "type": "array",
            "description": "Строки [k, e, num, den]: (num/den)·ζ_n^k·√q^e.",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 4, "maxItems": 4},
        },
    },
}

FLOAT_SCALAR = {
    "type": "object",
    "required": ["re", "im"],
    "properties": {"re": {"type": "number"}, "im": {"type": "number"}},
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ss-gamma report",
    "version": REPORT_SCHEMA_VERSION,
    "type": "object",
    "required": [
        "schema",
        "command",
        "inputs",
        "exact",
        "float",
        "tokens",
        "suite_results",
        "passed",
    ],
    "properties": {
        "schema": {"const": REPORT_SCHEMA_VERSION},
        "command": {"type": "string"},
        "inputs": {"type": "object", "description": "Проверенные флаги запуска без флагов вывода."},
        "exact": {
            "type": "object",
            "description": "Точные значения: Scalar как EXACT_SCALAR, RatFunc как "
            "{q, numerator: [[k, scalar]], denominator: [[k, scalar]]}.",
        },
        "float": {
            "type": "object",
            "description": "Приближения тех же величин: Scalar как FLOAT_SCALAR, RatFunc "
            "как списки [k, FLOAT_SCALAR].",
        },
        "tokens": {
            "type": "array",
            "items": {"type": "string"},
            "description": "Невычисляемые множители, например λ_{E/F}(ψ_α)^{-1}.",
        },
        "timing": {"type": ["object", "null"], "description": "Только с флагом --timing."},
        "suite_results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed", "checked", "first_counterexample", "details"],
            },
        },
        "passed": {"type": "boolean"},
    },
    "$defs": {"exact_scalar": EXACT_SCALAR, "float_scalar": FLOAT_SCALAR},
}
