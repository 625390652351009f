"""
Django settings for loadpath-bench.
Base configuration shared across all environments.
"""

from pathlib import Path

from decouple import Csv, config

# Build paths
BASE_DIR = Path(__file__).resolve().parent.parent
APPS_DIR = BASE_DIR / "apps"

# Security - MUST be overridden in production
SECRET_KEY = config("SECRET_KEY", default="unsafe-secret-key-change-in-production")
DEBUG = config("DEBUG", default=False, cast=bool)
ALLOWED_HOSTS = config("ALLOWED_HOSTS", default="localhost,127.0.0.1", cast=Csv())

# Application definition
DJANGO_APPS = [
    "django.contrib.contenttypes",
    "django.contrib.auth",
    "django.contrib.staticfiles",
]

THIRD_PARTY_APPS = [
    "rest_framework",
    "drf_spectacular",
    "drf_spectacular_sidecar",
]

LOCAL_APPS = [
    "core.apps.CoreConfig",
    "apps.grids.apps.GridsConfig",
    "apps.solver.apps.TopologySolverConfig",
    "apps.scenarios.apps.ScenariosConfig",
    "apps.forge.apps.ForgeConfig",
    "apps.metrics.apps.MetricsConfig",
    "apps.harness.apps.HarnessConfig",
]

INSTALLED_APPS = DJANGO_APPS + THIRD_PARTY_APPS + LOCAL_APPS

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
    "django.middleware.clickjacking.XFrameOptionsMiddleware",
]

ROOT_URLCONF = "config.urls"

# Prompt templates live under templates/prompts/
TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [BASE_DIR / "templates"],
        "APP_DIRS": True,
        "OPTIONS": {
            "context_processors": [
                "django.template.context_processors.debug",
                "django.template.context_processors.request",
            ],
        },
    },
]

WSGI_APPLICATION = "config.wsgi.application"
ASGI_APPLICATION = "config.asgi.application"

# No models; sqlite keeps the test runner and contrib apps happy
DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": config("DB_NAME", default=str(BASE_DIR / "db.sqlite3")),
    }
}

USE_I18N = False
USE_TZ = True
LANGUAGE_CODE = "en"
TIME_ZONE = config("TIME_ZONE", default="UTC")

STATIC_URL = "/static/"
STATIC_ROOT = BASE_DIR / "staticfiles"

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# ============================================================================
# DJANGO REST FRAMEWORK SETTINGS
# ============================================================================
REST_FRAMEWORK = {
    "DEFAULT_SCHEMA_CLASS": "drf_spectacular.openapi.AutoSchema",
    # Read endpoints are public; run submission checks X-Api-Key itself
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": [
        "rest_framework.permissions.AllowAny",
    ],
    "UNAUTHENTICATED_USER": None,
    # Run payloads are handed to Celery as-is, so only JSON bodies are accepted
    "DEFAULT_PARSER_CLASSES": [
        "rest_framework.parsers.JSONParser",
    ],
    "DEFAULT_PAGINATION_CLASS": "core.pagination.StandardPagination",
    "PAGE_SIZE": 25,
    "EXCEPTION_HANDLER": "core.exceptions.custom_exception_handler",
    "DEFAULT_RENDERER_CLASSES": [
        "rest_framework.renderers.JSONRenderer",
        "rest_framework.renderers.BrowsableAPIRenderer",
    ],
    "DEFAULT_THROTTLE_CLASSES": [
        "rest_framework.throttling.AnonRateThrottle",
    ],
    "DEFAULT_THROTTLE_RATES": {
        "anon": config("API_THROTTLE_RATE", default="600/hour"),
    },
}

# ============================================================================
# DRF-SPECTACULAR SETTINGS (Swagger/OpenAPI)
# ============================================================================
SPECTACULAR_SETTINGS = {
    "TITLE": "loadpath-bench API",
    "DESCRIPTION": "Browse benchmark instances, render prompts, score completions "
    "and queue evaluation runs.",
    "VERSION": "1.0.0",
    "SERVE_PERMISSIONS": ["rest_framework.permissions.AllowAny"],
    "SERVE_AUTHENTICATION": [],
    "SCHEMA_PATH_PREFIX": r"/api",
    "COMPONENT_SPLIT_REQUEST": True,
    "SWAGGER_UI_DIST": "SIDECAR",
    "SWAGGER_UI_FAVICON_HREF": "SIDECAR",
    "REDOC_DIST": "SIDECAR",
    "SWAGGER_UI_SETTINGS": {
        "deepLinking": True,
        "displayOperationId": False,
    },
    "COMPONENT_SECURITY_SCHEMES": {
        "apiKeyAuth": {
            "type": "apiKey",
            "in": "header",
            "name": "X-Api-Key",
        }
    },
    "TAGS": [
        {"name": "Instances", "description": "Benchmark task instances and rendered prompts"},
        {"name": "Scoring", "description": "Score a completion against one instance"},
        {"name": "Runs", "description": "Queue evaluation runs against a model endpoint"},
    ],
}

# ============================================================================
# BENCHMARK CONFIGURATION
# ============================================================================
LOADPATH_DATA_DIR = Path(config("LOADPATH_DATA_DIR", default=str(BASE_DIR / "data")))
LOADPATH_DATASET_PATH = config(
    "LOADPATH_DATASET_PATH", default=str(LOADPATH_DATA_DIR / "dataset.jsonl")
)
LOADPATH_RUNS_DIR = config("LOADPATH_RUNS_DIR", default=str(LOADPATH_DATA_DIR / "runs"))
LOADPATH_COMPLETION_CACHE_DIR = config(
    "LOADPATH_COMPLETION_CACHE_DIR", default=str(LOADPATH_DATA_DIR / "completions")
)
# YAML run config; empty means built-in defaults only
LOADPATH_RUN_CONFIG = config("LOADPATH_RUN_CONFIG", default="")
# Shared secret for POST /api/v1/runs/; empty leaves run submission open
LOADPATH_API_TOKEN = config("LOADPATH_API_TOKEN", default="")

# ============================================================================
# CACHES
# ============================================================================
REDIS_URL = config("REDIS_URL", default="")

CACHES = {
    "default": {
        "BACKEND": "django.core.cache.backends.locmem.LocMemCache",
    },
    # Completions outlive the process; the key already pins endpoint and prompt
    "completions": {
        "BACKEND": "django.core.cache.backends.filebased.FileBasedCache",
        "LOCATION": LOADPATH_COMPLETION_CACHE_DIR,
        "TIMEOUT": None,
        "OPTIONS": {"MAX_ENTRIES": 1_000_000},
    },
}

# ============================================================================
# LOGGING CONFIGURATION
# ============================================================================
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "level": "INFO",
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
        "file": {
            "level": "WARNING",
            "class": "logging.handlers.RotatingFileHandler",
            "filename": BASE_DIR / "logs" / "loadpath.log",
            "maxBytes": 1024 * 1024 * 15,  # 15MB
            "backupCount": 10,
            "formatter": "verbose",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console", "file"],
            "level": "INFO",
            "propagate": False,
        },
        "apps": {
            "handlers": ["console", "file"],
            "level": "INFO",
            "propagate": False,
        },
        "core": {
            "handlers": ["console", "file"],
            "level": "INFO",
            "propagate": False,
        },
    },
}

# Ensure logs directory exists
LOGS_DIR = BASE_DIR / "logs"
LOGS_DIR.mkdir(exist_ok=True)

# ============================================================================
# CELERY CONFIGURATION
# ============================================================================
CELERY_BROKER_URL = config("REDIS_URL", default="redis://localhost:6379/0")
CELERY_RESULT_BACKEND = config("REDIS_URL", default="redis://localhost:6379/0")
CELERY_ACCEPT_CONTENT = ["json"]
CELERY_TASK_SERIALIZER = "json"
CELERY_RESULT_SERIALIZER = "json"
CELERY_TIMEZONE = TIME_ZONE
CELERY_TASK_TRACK_STARTED = True
# Runs make hundreds of model calls; only the hard limit applies
CELERY_TASK_TIME_LIMIT = config("CELERY_TASK_TIME_LIMIT", default=6 * 60 * 60, cast=int)
CELERY_BROKER_CONNECTION_RETRY_ON_STARTUP = True
