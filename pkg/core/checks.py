# core/checks.py - Check records shared by the verify suites
import logging

import numpy as np

logger = logging.getLogger(__name__)


def record(name, error, tolerance, **details):
    """
    Build one check entry of a verify report

    Args:
        name: Check identifier, unique inside its suite
        error: Measured error (max over samples)
        tolerance: Pass threshold; error <= tolerance passes

    Returns:
        dict: JSON-ready entry
    """
    error = float(error)
    passed = bool(np.isfinite(error) and error <= tolerance)
    if not passed:
        logger.warning(f"Check {name} failed: error {error:.3e} > tolerance {tolerance:.1e}")
    return {
        'name': name,
        'error': error,
        'tolerance': float(tolerance),
        'status': 'pass' if passed else 'fail',
        **details,
    }


def logged(name, value, **details):
    """Entry for a measured quantity with no asserted tolerance"""
    logger.info(f"Experiment {name}: {value}")
    return {'name': name, 'value': value, 'status': 'logged', **details}
