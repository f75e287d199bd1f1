# transforms/intertwining.py - Residual of the intertwining identity W pi_0(g) = pi(g) W
"""
Intertwining residuals.

Disk: W(pi_1(g) f)(a) = <f, pi_1(g^{-1} s(a)) f_0>. Factoring
g^{-1} s(a) = s(a') h with h in K and pi_1(h) f_0 = chi f_0 gives the
induced action [pi(g) F](a) = conj(chi) F(a').

Hyperbolic: for g^{-1} = diag(E, E) in subgroup A the induced action is
F(u) -> E^{-1-2 sigma} F(E u E^{-1}) (apply_pisigma_interior).
"""

import logging

import numpy as np

from moebius.actions import project, section, section_inverse
from moebius.geometry import TildePoint
from moebius.group import as_cl11, to_su11
from representations.boundary import BoundaryFunction
from representations.series import Series, apply_pi1, apply_pisigma, apply_pisigma_interior
from .cauchy import cauchy_disk
from .hyperbolic import cauchy_tilde_pv

logger = logging.getLogger(__name__)


def induced_disk_action(g, a):
    """
    Point a' and character value chi of the factorization g^{-1} s(a) = s(a') h

    Returns:
        tuple: (a', chi) with pi_1(h) f_0 = chi f_0
    """
    element = to_su11(g).inverse() @ section('disk', a)
    a_prime = section_inverse('disk', element)
    vacuum = BoundaryFunction.on_circle(lambda phi: np.ones_like(phi), 8)
    chi = complex(apply_pi1(project('disk', element), vacuum).values[0])
    return a_prime, chi


def _disk_residual(g, f, points, q, interpolation):
    moved = apply_pi1(g, f, interpolation=interpolation)
    residual, estimate = 0.0, 0.0
    for a in points:
        left = cauchy_disk(moved, a, q)
        a_prime, chi = induced_disk_action(g, a)
        right = cauchy_disk(f, a_prime, q)
        residual = max(residual, abs(left.value - np.conj(chi) * right.value))
        estimate = max(estimate, left.quadrature_error_estimate + right.quadrature_error_estimate)
    return residual, estimate


def _tilde_residual(sigma, g, f, points, q, interpolation):
    moved = apply_pisigma(sigma, g, f, interpolation=interpolation)
    scale = float(np.max(np.abs(as_cl11(g).inverse().na.power(-1.0 - 2.0 * sigma).components)))
    residual, estimate = 0.0, 0.0
    for point in points:
        left = cauchy_tilde_pv(sigma, moved, point, q)
        inner = []

        def transform(v, sheet=point.sheet):
            inner.append(cauchy_tilde_pv(sigma, f, TildePoint(sheet, v), q))
            return inner[-1].value

        right = apply_pisigma_interior(sigma, g, transform)(point.u)
        residual = max(residual, float(np.max(np.abs((left.value - right).components))))
        estimate = max(estimate, left.quadrature_error_estimate + scale * inner[-1].quadrature_error_estimate)
    return residual, estimate


def intertwining_residual(param, g, f, sample_points, q=None, interpolation=None, with_estimate=False):
    """
    max over sample points of |W(pi_0(g) f) - pi(g)(W f)|

    Args:
        param: RepParam, mock (disk) or hyperbolic (subgroup-A elements only)
        g: group element
        f: boundary function of the series
        sample_points: complex points of the disk, or TildePoints
        q: QuadratureSpec passed to the transforms
        interpolation: resampling used by pi_0(g) f
        with_estimate: also return the summed quadrature error estimates

    Returns:
        float, or (float, float) with with_estimate
    """
    if param.series == Series.MOCK:
        residual, estimate = _disk_residual(g, f, sample_points, q, interpolation)
    elif param.series == Series.HYPERBOLIC:
        residual, estimate = _tilde_residual(param.sigma, g, f, sample_points, q, interpolation)
    else:
        raise ValueError(f"No intertwining residual for the {param.series.value} series")

    logger.info(f"Intertwining residual ({param.series.value}): {residual:.3e}, estimate {estimate:.3e}")
    if with_estimate:
        return residual, estimate
    return residual
