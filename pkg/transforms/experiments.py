# transforms/experiments.py - Logged experiments with no asserted tolerance
"""
Experiments on open questions of the hyperbolic theory.

- hardy_profile: Hardy norms of one function over a lambda grid
- norm_ratio_scan: Hardy norm of W_sigma f on T_lambda against |f|^2
- equivalence_scan: subgroup-A matrix coefficients of pi_1 and pi_0

Results are returned as JSON-ready dicts and logged; nothing here fails.
"""

import logging

import numpy as np

from moebius.geometry import BRANCHES, BranchCoord, TildePoint, circle_point, in_disk
from representations.boundary import BoundaryFunction
from representations.lie import A, one_param
from representations.series import apply_pi1, apply_pisigma, clifford_inner
from .exceptions import PVDivergence
from .hyperbolic import cauchy_tilde_pv, hardy_norm

logger = logging.getLogger(__name__)


def hardy_profile(F, lams, q=None):
    """Squared Hardy norms over a lambda grid; monotonicity is reported"""
    rows = [{'lam': float(lam), 'norm': hardy_norm(F, lam, q)} for lam in lams]
    norms = np.array([row['norm'] for row in rows])
    steps = np.diff(norms)
    monotone = bool(np.all(steps >= 0) or np.all(steps <= 0))
    logger.info(f"Hardy profile over {len(rows)} radii, monotone: {monotone}")
    return {'rows': rows, 'monotone': monotone}


def _disk_partner(point):
    """Same vector on the sheet that puts it inside the disk; the kernel ignores sheets"""
    if in_disk(point):
        return point
    return TildePoint(point.sheet.flipped(), point.u)


def norm_ratio_scan(sigma, f, lams, q=None, points_per_branch=9, t_span=2.0):
    """
    Isometry experiment for W_sigma

    For each lambda, the Hardy-type sum |lambda|^{-1} sum_branches
    int |W_sigma f(u(t))|^2 dt over a coarse trapezoid grid of
    [-t_span, t_span], divided by the tilde-T norm |f|^2.

    Args:
        lams: circle parameters in (-1, 0)
        points_per_branch: transform evaluations per branch and radius

    Returns:
        list: one dict per lambda with the ratio and the number of
        evaluations dropped by PVDivergence
    """
    t = np.linspace(-t_span, t_span, points_per_branch)
    weights = np.full(points_per_branch, t[1] - t[0])
    weights[0] = weights[-1] = 0.5 * (t[1] - t[0])
    reference = f.norm() ** 2

    rows = []
    for lam in lams:
        total, failures = 0.0, 0
        for branch in BRANCHES:
            for t_j, w_j in zip(t, weights):
                point = _disk_partner(circle_point(lam, BranchCoord(branch, float(t_j))))
                try:
                    value = cauchy_tilde_pv(sigma, f, point, q).value
                except PVDivergence:
                    failures += 1
                    continue
                total += float(value.norm_sq()) * w_j
        hardy = total / abs(lam)
        ratio = hardy / reference if reference else float('nan')
        logger.info(f"Norm ratio sigma={sigma} lambda={lam}: {ratio:.6g} ({failures} dropped)")
        rows.append({'lam': float(lam), 'hardy': hardy, 'ratio': ratio, 'failures': failures})
    return rows


def equivalence_scan(taus, n=2001, t_max=8.0):
    """
    Subgroup-A matrix coefficients of the mock discrete and sigma = 0 series

    mock: <pi_1(e^{tau A}) f_0, f_0> / |f_0|^2 with f_0 = 1 on the circle;
    hyperbolic: scalar part of <pi_0(e^{tau A}) w, w> / |w|^2 for a
    Gaussian window w on the principal branch.
    """
    vacuum = BoundaryFunction.on_circle(lambda phi: np.ones_like(phi), 512)
    window = BoundaryFunction.on_tilde(
        lambda branch, t: np.exp(-t ** 2) * (branch == 0), n, t_max)
    window_norm = clifford_inner(window, window).c0

    rows = []
    for tau in taus:
        g = one_param(A, float(tau))
        mock = apply_pi1(g, vacuum).inner(vacuum) / (2.0 * np.pi)
        hyperbolic = clifford_inner(apply_pisigma(0.0, g, window), window).c0 / window_norm
        rows.append({
            'tau': float(tau),
            'mock': [float(mock.real), float(mock.imag)],
            'hyperbolic': float(hyperbolic),
            'difference': float(abs(mock - hyperbolic)),
        })
    logger.info(f"Equivalence scan: max coefficient gap {max(row['difference'] for row in rows):.3e}")
    return rows
