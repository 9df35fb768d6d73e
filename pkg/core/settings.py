"""
Django settings for core project.
Projeto de codificação de trajetórias 3D em gramáticas de ação (Frenet + DCC)
e classificação por SVM. Sem superfície HTTP nem banco de dados: o projeto é
operado por management commands.
"""
from pathlib import Path
import os
from dotenv import load_dotenv
load_dotenv()
BASE_DIR = Path(__file__).resolve().parent.parent
SECRET_KEY = os.getenv('SECRET_KEY', 'django-insecure-action-grammar-local-key')
DEBUG = os.getenv('DEBUG', 'True') == 'True'
ALLOWED_HOSTS = []
INSTALLED_APPS = [
    'core.apps.CoreConfig',
    'rest_framework',
    'grammar',
    'classifier',
]
MIDDLEWARE = []
DATABASES = {}
USE_TZ = True
TIME_ZONE = 'UTC'
GRAMMAR_DATA_DIR = Path(os.getenv('GRAMMAR_DATA_DIR', BASE_DIR / 'data'))
def _env_optional_float(name, default=None):
    value = os.getenv(name)
    if value in (None, '', 'None', 'none'):
        return default
    return float(value)
ACTION_GRAMMAR = {
    'MODE': os.getenv('GRAMMAR_MODE', 'ff'),
    'BASE_P': int(os.getenv('GRAMMAR_BASE_P', '2')),
    'ALIGNMENT': os.getenv('GRAMMAR_ALIGNMENT', 'cut'),
    'KERNEL': os.getenv('GRAMMAR_KERNEL', 'linear'),
    'ENCODING': os.getenv('GRAMMAR_ENCODING', 'integer'),
    'SCOPE': os.getenv('GRAMMAR_SCOPE', 'task'),
    'SEED': int(os.getenv('GRAMMAR_SEED', '7')),
    'K_MIN': int(os.getenv('GRAMMAR_K_MIN', '2')),
    'K_MAX': int(os.getenv('GRAMMAR_K_MAX', '20')),
    'REPEATS': int(os.getenv('GRAMMAR_REPEATS', '10')),
    'C': float(os.getenv('GRAMMAR_C', '1.0')),
    'POLY_DEGREE': int(os.getenv('GRAMMAR_POLY_DEGREE', '3')),
    'POLY_COEF0': float(os.getenv('GRAMMAR_POLY_COEF0', '1.0')),
    'GAMMA': _env_optional_float('GRAMMAR_GAMMA'),
    'MOTION_EPSILON': float(os.getenv('GRAMMAR_MOTION_EPSILON', '1e-6')),
    'INIT_CONVENTION': os.getenv('GRAMMAR_INIT_CONVENTION', 'osculating'),
    'N_JOBS': int(os.getenv('GRAMMAR_N_JOBS', '1')),
    'LINEAR_EPOCHS': int(os.getenv('GRAMMAR_LINEAR_EPOCHS', '1000')),
    'SMO_TOL': float(os.getenv('GRAMMAR_SMO_TOL', '1e-3')),
    'SMO_MAX_ITER': int(os.getenv('GRAMMAR_SMO_MAX_ITER', '100000')),
    'RESAMPLE_TEST_UNIT': os.getenv('GRAMMAR_RESAMPLE_TEST_UNIT', 'train'),
}
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': os.getenv('LOG_LEVEL', 'INFO'),
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.getenv('LOG_LEVEL', 'INFO'),
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': os.getenv('LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
        'core': {
            'handlers': ['console'],
            'level': os.getenv('LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
        'grammar': {
            'handlers': ['console'],
            'level': os.getenv('LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
        'classifier': {
            'handlers': ['console'],
            'level': os.getenv('LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'COERCE_DECIMAL_TO_STRING': False,
}
