"""
Django settings for the listlab project.

For more information on this file, see
https://docs.djangoproject.com/en/5.0/topics/settings/

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv(
    "DJANGO_SECRET_KEY", "django-insecure-listlab-development-key-not-for-production"
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv("DJANGO_DEBUG", "1") == "1"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "listcore.apps.ListcoreConfig",
    "algorithms.apps.AlgorithmsConfig",
    "corpus.apps.CorpusConfig",
    "oracle.apps.OracleConfig",
    "bench.apps.BenchConfig",
]

MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
    "django.middleware.clickjacking.XFrameOptionsMiddleware",
]

ROOT_URLCONF = "config.urls"

TEMPLATES = [
    {
        "BACKEND": "django.template.backends.django.DjangoTemplates",
        "DIRS": [],
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


# Every run is in-memory; there is no database.
DATABASES = {}


# List lab defaults
# Every entry can be overridden from the environment.

LISTLAB = {
    "COST_MODEL": os.getenv("LISTLAB_COST_MODEL", "full"),
    "VFC_POLICY": os.getenv("LISTLAB_VFC_POLICY", "literal"),
    "LIST_ORDER": os.getenv("LISTLAB_LIST_ORDER", "first-occurrence"),
    "STRIP_BYTES": os.getenv("LISTLAB_STRIP_BYTES", "20,0d,0a"),
    "VERIFY_MAX_LIST_SIZE": int(os.getenv("LISTLAB_VERIFY_MAX_LIST_SIZE", "3")),
    "VERIFY_MAX_SEQUENCE_LENGTH": int(
        os.getenv("LISTLAB_VERIFY_MAX_SEQUENCE_LENGTH", "6")
    ),
    "CORPUS_DIR": os.getenv("LISTLAB_CORPUS_DIR"),
}


LISTLAB_LOG_LEVEL = os.getenv("LISTLAB_LOG_LEVEL", "INFO")

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
    "loggers": {
        app: {
            "handlers": ["console"],
            "level": LISTLAB_LOG_LEVEL,
            "propagate": False,
        }
        for app in ("listcore", "algorithms", "corpus", "oracle", "bench")
    },
}

if os.getenv("LISTLAB_TRACE_STEPS"):
    LOGGING["loggers"]["algorithms"]["level"] = "DEBUG"

