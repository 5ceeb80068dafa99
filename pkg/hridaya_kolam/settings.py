"""
Django settings for the hridaya_kolam project.

The project has no web surface: it exists to host the ``kolam`` app, its
management commands and its test suite.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""
from pathlib import Path
import os
from dotenv import load_dotenv

BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv(BASE_DIR / ".env")
SECRET_KEY = os.getenv("SECRET_KEY", "django-insecure-kolam-local-only")
DEBUG = os.getenv("DEBUG", "False") == "True"

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    "kolam",
]

# No models, no database.
DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# -------------------------------------------------------------------
# Kolam rendering
# -------------------------------------------------------------------
# Built-in render defaults. A key=value file named by KOLAM_CONFIG (or passed
# with --config) overrides these; command-line flags override both.
KOLAM_RENDER = {
    "canvas_px": 800,
    "margin_ratio": 0.08,
    "show_dots": True,
    "show_arms": False,
    "stroke_width_px": 2.0,
    "dot_radius_px": 3.0,
    "fill_mode": "none",
    "palette": ["#8b1e3f", "#f2c14e"],
    "dot_color": "#2b2b2b",
}

KOLAM_STYLE_DEFAULTS = {
    "style": "straight",
    "bulge": "0.3",
}

KOLAM_CONFIG = os.getenv("KOLAM_CONFIG") or None

KOLAM_GALLERY_WORKERS = int(os.getenv("KOLAM_GALLERY_WORKERS", "4"))

# -------------------------------------------------------------------
# Logging
# -------------------------------------------------------------------
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {message}",
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
        "level": "WARNING",
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": os.getenv("DJANGO_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
        "kolam": {
            "handlers": ["console"],
            "level": os.getenv("KOLAM_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}
