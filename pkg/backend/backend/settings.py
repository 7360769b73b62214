import os
from pathlib import Path

from django.core.management.utils import get_random_secret_key
from dotenv import load_dotenv

load_dotenv()

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv("SECRET_KEY", get_random_secret_key())

DEBUG = os.getenv("DEBUG", "False") == "True"

ALLOWED_HOSTS = os.getenv("ALLOWED_HOSTS", "*").split(" ")


INSTALLED_APPS = [
    "django.contrib.contenttypes",
    "rest_framework",
    "core.apps.CoreConfig",
    "padic.apps.PadicConfig",
    "scalars.apps.ScalarsConfig",
    "characters.apps.CharactersConfig",
    "tate.apps.TateConfig",
    "metaplectic.apps.MetaplecticConfig",
    "weilrep.apps.WeilrepConfig",
    "shimura.apps.ShimuraConfig",
    "langlands.apps.LanglandsConfig",
    "api.v1.apps.ApiConfig",
]

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = True

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

REST_FRAMEWORK = {
    "UNAUTHENTICATED_USER": None,
    "COERCE_DECIMAL_TO_STRING": False,
}

# ---- Арифметика ----
PADIC_PRECISION = int(os.getenv("PADIC_PRECISION", "12"))
PADIC_PRECISION_FLOOR = int(os.getenv("PADIC_PRECISION_FLOOR", "1"))
PSI_MAX_DEPTH = int(os.getenv("PSI_MAX_DEPTH", "24"))
WEIL_INDEX_MAX_DEPTH = int(os.getenv("WEIL_INDEX_MAX_DEPTH", "8"))
# Знак в β_ψ = ±γ(ψ)^{-1}; только +1 согласован с (n(1)w)^3 = 1 в Mp(2)
BETA_SIGN = int(os.getenv("BETA_SIGN", "1"))

# ---- Проверки и отчеты ----
RANDOM_SEED = int(os.getenv("RANDOM_SEED", "20240917"))
SPLITTING_PAIR_BUDGET = int(os.getenv("SPLITTING_PAIR_BUDGET", "250000"))
BRUTE_FORCE_CHUNKS = int(os.getenv("BRUTE_FORCE_CHUNKS", "4"))
REPORT_OUTPUT_DIR = os.getenv("REPORT_OUTPUT_DIR") or None

# ---- Celery ----
CELERY_BROKER_URL = os.getenv("CELERY_BROKER_URL", "memory://")
CELERY_RESULT_BACKEND = os.getenv("CELERY_RESULT_BACKEND", "cache+memory://")
CELERY_TASK_ALWAYS_EAGER = os.getenv("CELERY_TASK_ALWAYS_EAGER", "True") == "True"
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} {levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "root": {
        "handlers": ["console"],
        "level": LOG_LEVEL,
    },
}
