"""
Django settings module selector.
Loads appropriate settings based on environment variables.

Default: config.local (development)
Production: config.production (when DJANGO_ENV=production)
"""

import os

if os.environ.get("DJANGO_ENV") == "production":
    from .production import *  # noqa
else:
    from .local import *  # noqa
