# core/conf.py - Access to R11_SETTINGS with library defaults
from django.conf import settings

DEFAULTS = {
    'THREADS': 4,
    'CIRCLE_POINTS': 2048,
    'BRANCH_POINTS': 2048,
    'T_MAX': 12.0,
    'PV_EPSILON0': 0.1,
    'PV_LEVELS': 6,
    'GAUSS_ORDER': 16,
    'FD_STEP': 1e-4,
    'BERGMAN_RADIAL': 200,
    'BERGMAN_ANGULAR': 200,
    'LIGHT_CONE_RTOL': 1e-12,
    'UNIMODULAR_ATOL': 1e-12,
    'INTERPOLATION': 'cubic',
    'OUTPUT_DIR': 'output',
}


def r11_setting(name):
    """
    Read one numerical setting

    Args:
        name: Key of R11_SETTINGS

    Returns:
        The configured value, or the library default when Django settings
        are not configured (plain library use outside manage.py)
    """
    if settings.configured:
        return getattr(settings, 'R11_SETTINGS', {}).get(name, DEFAULTS[name])
    return DEFAULTS[name]
