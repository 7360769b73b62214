# -------------------------
#     Константы отчетов
# -------------------------

REPORT_SCHEMA_VERSION: str = "1.0"
REPORT_FORMATS: tuple[str, str] = ("text", "json")
FLOAT_DIGITS: int = 12

SUITE_NAMES: tuple[str, ...] = (
    "hilbert",
    "gauss",
    "weil",
    "tate",
    "cocycle",
    "splitting",
    "weilrep",
    "closed_form",
    "intertwining",
    "pole",
    "trivial_gamma",
    "q2",
    "twisting",
    "parameter",
    "convention",
)
ALL_SUITES: str = "all"

# -------------------------
#    Константы команд
# -------------------------

COMMAND_NAMES: tuple[str, ...] = ("gamma", "pole_scan", "parameter", "q2", "verify", "oracle")
DEFAULT_TAU_ZETA_ORDER: int = 8
