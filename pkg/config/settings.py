# config/settings.py - r11 Django Configuration
"""
Django settings for the r11 function-theory toolkit.

This configuration supports:
- Cl(1,1) algebra, SL(2,R) realizations and Moebius actions
- Classical and hyperbolic integral transforms with PV quadrature
- Dirac operators, invariant Laplacians and Taylor machinery
- Batch management commands: verify, transform, dump

Numerical tunables live in R11_SETTINGS and can be overridden through
the environment (or a .env file read by python-decouple), e.g.
R11_THREADS=8 python manage.py transform --job job.json
"""

from pathlib import Path
from decouple import config

# =============================================================================
# CORE DJANGO SETTINGS
# =============================================================================

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Not used for anything security relevant; no HTTP surface is served.
SECRET_KEY = config('R11_SECRET_KEY', default='r11-local-batch-key')

DEBUG = config('R11_DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []

# =============================================================================
# APPLICATION DEFINITION
# =============================================================================

INSTALLED_APPS = [
    # Third-party applications
    'rest_framework',              # Serializers for job-file validation

    # Custom applications
    'core',                        # Shared numerics and base exceptions
    'clifford',                    # Cl(1,1) arithmetic
    'moebius',                     # SL(2,R) realizations and actions
    'representations',             # sl(2,R), series representations
    'transforms',                  # Cauchy, Bergman and PV transforms
    'operators',                   # Generators, Dirac, Laplacians
    'taylor',                      # Taylor decompositions
    'cli',                         # verify / transform / dump commands
]

MIDDLEWARE = []

# =============================================================================
# DATABASE CONFIGURATION
# =============================================================================

# Pure computation; nothing is persisted.
DATABASES = {}

# =============================================================================
# REST FRAMEWORK CONFIGURATION
# =============================================================================

REST_FRAMEWORK = {
    # Serializers are used standalone; no auth stack is installed
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
}

# =============================================================================
# R11 NUMERICAL CONFIGURATION
# =============================================================================

R11_SETTINGS = {
    'THREADS': config('R11_THREADS', default=4, cast=int),                 # Worker cap for CLI jobs
    'CIRCLE_POINTS': config('R11_CIRCLE_POINTS', default=2048, cast=int),  # N on the unit circle
    'BRANCH_POINTS': config('R11_BRANCH_POINTS', default=2048, cast=int),  # N per hyperbolic branch
    'T_MAX': config('R11_T_MAX', default=12.0, cast=float),                # Branch truncation
    'PV_EPSILON0': config('R11_PV_EPSILON0', default=0.1, cast=float),     # First excision radius
    'PV_LEVELS': config('R11_PV_LEVELS', default=6, cast=int),             # Halvings of the radius
    'GAUSS_ORDER': config('R11_GAUSS_ORDER', default=16, cast=int),        # Nodes per panel
    'FD_STEP': config('R11_FD_STEP', default=1e-4, cast=float),            # Finite-difference step
    'BERGMAN_RADIAL': config('R11_BERGMAN_RADIAL', default=200, cast=int),
    'BERGMAN_ANGULAR': config('R11_BERGMAN_ANGULAR', default=200, cast=int),
    'LIGHT_CONE_RTOL': config('R11_LIGHT_CONE_RTOL', default=1e-12, cast=float),
    'UNIMODULAR_ATOL': config('R11_UNIMODULAR_ATOL', default=1e-12, cast=float),
    'INTERPOLATION': config('R11_INTERPOLATION', default='cubic'),         # cubic | fourier
    'OUTPUT_DIR': config('R11_OUTPUT_DIR', default=str(BASE_DIR / 'output')),
}

# =============================================================================
# INTERNATIONALIZATION
# =============================================================================

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# =============================================================================
# LOGGING CONFIGURATION
# =============================================================================

R11_LOG_LEVEL = config('R11_LOG_LEVEL', default='INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose' if DEBUG else 'simple',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
        # Custom app loggers
        **{
            app: {
                'handlers': ['console'],
                'level': R11_LOG_LEVEL,
                'propagate': False,
            }
            for app in (
                'core', 'clifford', 'moebius', 'representations',
                'transforms', 'operators', 'taylor', 'cli',
            )
        },
    },
}
