# operators/dirac.py - Dirac operators, invariant Laplacians, annihilation of transform images
"""
Dirac and Laplace operators by central differences.

- dirac: 2y d/dz-bar on H (d/da-bar on the disk); on the tilde models
  e1 d1 f + e2 d2 f (left) or (d1 f) e1 + (d2 f) e2 (right), times 2y
  on tilde-H. The hyperbolic Cauchy kernel is annihilated from the right.
- laplacian: y^2 (d1^2 + d2^2) on H and y^2 (eps_1 d1^2 + eps_2 d2^2) on
  tilde-H with eps_j the squares of the Clifford images of Z and A;
  the disk variants drop y^2.
- annihilation_residual: Dirac applied to normalized transform outputs
"""

import logging

import numpy as np

from clifford.algebra import E1, E2, mul
from core.numerics import observed_order
from moebius.geometry import TildePoint
from representations.boundary import BoundaryFunction, Domain
from transforms.cauchy import cauchy_disk
from transforms.hyperbolic import cauchy_tilde_pv
from .fields import COMPLEX_DOMAINS, HALFPLANES, FieldSample

logger = logging.getLogger(__name__)

SIDES = ('left', 'right')

# Clifford images c(Z) = e1 and c(A) = e2 pair with the coordinates x1, x2
CLIFFORD_AXES = (E1, E2)
SIGNATURE = tuple(float(mul(blade, blade).c0) for blade in CLIFFORD_AXES)


def dirac(domain, f, pt, side='right'):
    """
    Dirac operator of the model applied to f at pt

    Args:
        domain: 'halfplane', 'disk', 'tilde_halfplane' or 'tilde_disk'
        f: FieldSample on the domain
        pt: interior point
        side: 'left' or 'right', ignored on the complex models

    Returns:
        complex, or Cliff11 on the tilde models

    Raises:
        OutOfDomain: pt is not interior
    """
    if f.domain != domain:
        raise ValueError(f"Field lives on {f.domain}, Dirac operator requested on {domain}")
    if side not in SIDES:
        raise ValueError(f"Side must be one of {SIDES}, got '{side}'")
    f.check_interior(pt)

    d1, d2 = f.partial(pt, 0), f.partial(pt, 1)
    if domain == 'halfplane':
        return complex(f.height(pt) * (d1 + 1j * d2))
    if domain == 'disk':
        return complex(0.5 * (d1 + 1j * d2))

    partials = (f.decode(d1), f.decode(d2))
    if side == 'left':
        total = mul(CLIFFORD_AXES[0], partials[0]) + mul(CLIFFORD_AXES[1], partials[1])
    else:
        total = mul(partials[0], CLIFFORD_AXES[0]) + mul(partials[1], CLIFFORD_AXES[1])
    if domain == 'tilde_halfplane':
        total = total * (2.0 * f.height(pt))
    return total


def laplacian(domain, f, pt):
    """
    Invariant Laplacian of the model at pt by second differences

    Returns:
        complex, or Cliff11 on the tilde models
    """
    if f.domain != domain:
        raise ValueError(f"Field lives on {f.domain}, Laplacian requested on {domain}")
    f.check_interior(pt)

    d11, d22 = f.second_partial(pt, 0), f.second_partial(pt, 1)
    if domain in COMPLEX_DOMAINS:
        signs = (1.0, 1.0)
    else:
        signs = SIGNATURE
    scale = f.height(pt) ** 2 if domain in HALFPLANES else 1.0
    return f.decode(scale * (signs[0] * d11 + signs[1] * d22))


# ----------------------------------------------------------------------
# Annihilation of transform images
# ----------------------------------------------------------------------

def _grid_entry(point):
    if isinstance(point, TildePoint):
        return [point.sheet.value, float(point.u.u1), float(point.u.u2)]
    z = complex(point)
    return [z.real, z.imag]


def _transform(theory, f, point, q, sigma):
    if theory == 'disk':
        return cauchy_disk(f, point, q)
    return cauchy_tilde_pv(sigma, f, point, q)


def _is_zero(f):
    if not isinstance(f, BoundaryFunction):
        return False
    values = f.values.components if f.domain == Domain.TILDE else f.values
    return not np.any(values)


def _residual_at(theory, field, point):
    value = dirac('disk' if theory == 'disk' else 'tilde_disk', field, point, side='right')
    if theory == 'disk':
        return abs(value)
    return float(np.max(np.abs(value.coefficients)))


def annihilation_residual(theory, f, points, q=None, sigma=0.0, h=None):
    """
    max |Dirac (normalized transform of f)| over interior points

    Elliptic: d/da-bar of cauchy_disk(f, a).normalized. Hyperbolic: the
    right Dirac operator in u of cauchy_tilde_pv(sigma, f, u).normalized.

    Args:
        theory: 'disk' or 'tilde'
        f: BoundaryFunction admissible for the transform
        points: complex points, or TildePoints for 'tilde'
        q: QuadratureSpec passed to the transform
        h: difference step (FD_STEP by default)

    Returns:
        dict: grid, max_residual, slope_estimate (observed order between
        h and h/2) and error_estimate (quadrature estimate amplified by 1/h)
    """
    if theory not in ('disk', 'tilde'):
        raise ValueError(f"Theory must be 'disk' or 'tilde', got '{theory}'")
    if _is_zero(f):
        logger.debug("Zero boundary data; residual vanishes")
        return {'grid': [_grid_entry(p) for p in points], 'max_residual': 0.0,
                'slope_estimate': 0.0, 'error_estimate': 0.0}

    domain = 'disk' if theory == 'disk' else 'tilde_disk'
    field = FieldSample(domain, lambda point: _transform(theory, f, point, q, sigma).normalized, h)
    halved = field.with_evaluator(field.evaluator, step=field.step / 2.0)
    residual, finer, estimate = 0.0, 0.0, 0.0
    for point in points:
        residual = max(residual, _residual_at(theory, field, point))
        finer = max(finer, _residual_at(theory, halved, point))
        estimate = max(estimate, _transform(theory, f, point, q, sigma).quadrature_error_estimate / field.step)

    slope = observed_order([residual, finer])
    logger.info(f"Annihilation residual ({theory}) over {len(points)} point(s): {residual:.3e}, "
                f"slope {slope:.2f}, quadrature bound {estimate:.3e}")
    return {
        'grid': [_grid_entry(p) for p in points],
        'max_residual': residual,
        'slope_estimate': slope,
        'error_estimate': estimate,
    }
