"""
Django settings for the digitopo project.

The project is command-line only: there are no URL routes, no templates and no
models. Django provides configuration, logging setup, the management command
framework and the test runner.

Deployment-specific values live in site_settings.py.
"""

from . import site_settings

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
import os
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


SECRET_KEY = site_settings.SECRET_KEY

DEBUG = site_settings.DEBUG

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = (
    'helpers',
    'grid',
    'homology',
    'surfaces',
    'homotopy',
    'planning',
    'toolkit',
)

MIDDLEWARE = []


# Database
# Nothing is stored; Django still wants a default connection to boot.
DATABASES = site_settings.DATABASES

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Topology toolkit settings
TOPOLOGY = {
    'SEARCH_BUDGET': site_settings.SEARCH_BUDGET,
    'PATH_SLACK': site_settings.PATH_SLACK,
    'COEFFICIENTS': site_settings.COEFFICIENTS,
    'PATH_ADJACENCY': site_settings.PATH_ADJACENCY,
    'MAX_GRID_DIMENSION': 4,
    'CERTIFICATE_DIR': os.path.join(BASE_DIR, 'toolkit', 'certificates'),
}


# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': site_settings.LOG_LEVEL,
    },
}
