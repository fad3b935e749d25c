"""
Django base settings for the NCK (noncompactness kit) project.
Shared settings across development and production environments.
"""
from pathlib import Path

import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Initialize environment variables
env = environ.Env(
    DEBUG=(bool, False)
)

# Read .env file
env_file = BASE_DIR.parent / '.env'
if env_file.exists():
    environ.Env.read_env(env_file)

# Only used for signing, which the toolkit never does
SECRET_KEY = env('SECRET_KEY', default='nck-insecure-local-key')

DEBUG = env('DEBUG', default=False)

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    # Third party apps
    'rest_framework',
    # Local apps
    'apps.core',
    'apps.geometry',
    'apps.function_space',
    'apps.moduli',
    'apps.net_builder',
    'apps.cli',
]

# Batch toolkit: nothing is persisted
DATABASES = {}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Toolkit settings
NCK_TOL = env.float('NCK_TOL', default=1e-9)
NCK_SEED = env.int('NCK_SEED', default=0)
NCK_WORKERS = env.int('NCK_WORKERS', default=1)
NCK_WELZL_MAX_DIM = 10
NCK_MAX_DIM = 16
NCK_CONDITION_LIMIT = 1e10
NCK_CORESET_MAX_ITER = env.int('NCK_CORESET_MAX_ITER', default=20000)
NCK_ORACLE_MAX_POINTS = 12
NCK_LOG_LEVEL = env('NCK_LOG_LEVEL', default='INFO')

# Console logging on stderr; command artifacts own stdout
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps': {
            'handlers': ['console'],
            'level': NCK_LOG_LEVEL,
            'propagate': False,
        },
    },
}
