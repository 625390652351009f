"""
Local development settings.
Inherits from base.py and overrides for local environment.
"""

from .base import *  # noqa

DEBUG = True
SECRET_KEY = "django-insecure-local-development-key-only"

ALLOWED_HOSTS = ["*"]

# Run tasks inline so `runserver` works without a worker
CELERY_TASK_ALWAYS_EAGER = config("CELERY_TASK_ALWAYS_EAGER", default=True, cast=bool)
CELERY_TASK_EAGER_PROPAGATES = True

# Enhanced logging for development
LOGGING["loggers"]["apps"]["level"] = "DEBUG"
LOGGING["loggers"]["core"]["level"] = "DEBUG"
