# transforms/hyperbolic.py - Hyperbolic Cauchy kernel, PV transform and Hardy norms
"""
Cauchy-type transform of the hyperbolic theory on tilde-T.

On the branch whose e1 factor has sign eps, with z = exp(e1e2 t), the
kernel in idempotent components is

    (-eps e1 u + z)^{-1} = p1 / (e^t + eps (u1 - u2)) + p2 / (e^-t + eps (u1 + u2))

For general sigma the integrand is k z with k = A^sigma z^sigma B^{-1-sigma},
B = z - eps e1 u and A = 1 - eps u e1 z. Both sheets carry the same kernel.
Each component has at most one real zero per branch; integrals across it
are principal values by symmetric excision.
"""

import logging
import math

import numpy as np

from clifford.algebra import EvenNumber
from core.conf import r11_setting
from moebius.exceptions import OutOfDomain
from moebius.geometry import BRANCHES, BranchCoord, TildePoint, branch_sign, circle_point, component_roots, in_disk
from representations.boundary import Domain
from .exceptions import LightConeSingularity
from .quadrature import QuadratureSpec, TransformResult, aligned_rule, excised_rule, extrapolate_pv

logger = logging.getLogger(__name__)


def _vector(u):
    return u.u if isinstance(u, TildePoint) else u


# ----------------------------------------------------------------------
# Kernel
# ----------------------------------------------------------------------

def kernel_denominators(u, sign, t):
    """
    Idempotent components of B = z - eps e1 u and A = 1 - eps u e1 z

    Returns:
        tuple: (B, A) as EvenNumbers, broadcast over u and t
    """
    u = _vector(u)
    growth, decay = np.exp(t), np.exp(-t)
    b = EvenNumber(growth + sign * (u.u1 - u.u2), decay + sign * (u.u1 + u.u2))
    a = EvenNumber(1.0 + sign * (u.u1 + u.u2) * growth, 1.0 + sign * (u.u1 - u.u2) * decay)
    return b, a


def kernel_values(u, sign, t, sigma=0.0):
    """
    Vectorized kernel A^sigma z^sigma B^{-1-sigma} without domain checks

    Non-finite components mark singular points or undefined powers.
    """
    b, a = kernel_denominators(u, sign, t)
    with np.errstate(divide='ignore', invalid='ignore'):
        if sigma == 0.0:
            return EvenNumber(1.0 / b.a1, 1.0 / b.a2)
        z = EvenNumber(np.exp(t), np.exp(-t))
        return (a.power(sigma, strict=False) * z.power(sigma, strict=False)
                * b.power(-1.0 - sigma, strict=False))


def sio1_values(u, sign, t, sigma=0.0):
    """Vectorized integrand kernel * z"""
    return kernel_values(u, sign, t, sigma) * EvenNumber(np.exp(t), np.exp(-t))


def kernel_tilde(u, coord, sigma=0.0):
    """
    Hyperbolic Cauchy kernel at one boundary point

    Args:
        u: TildePoint or Vector11
        coord: BranchCoord of the boundary point
        sigma: real parameter; fractional powers go through even_calculus

    Returns:
        EvenNumber

    Raises:
        LightConeSingularity: coord is a singular point of u
        DomainError: a fractional power of a negative component
    """
    u = _vector(u)
    sign, t = coord.sign, float(coord.t)
    b, a = kernel_denominators(u, sign, t)
    rtol = r11_setting('LIGHT_CONE_RTOL')
    if (abs(b.a1) <= rtol * (math.exp(t) + abs(u.u1 - u.u2))
            or abs(b.a2) <= rtol * (math.exp(-t) + abs(u.u1 + u.u2))):
        raise LightConeSingularity("Kernel evaluated at a singular point", u1=u.u1, u2=u.u2,
                                   branch=coord.branch, t=t)
    if sigma == 0.0:
        return b.inverse()
    z = EvenNumber(math.exp(t), math.exp(-t))
    return a.power(sigma) * z.power(sigma) * b.power(-1.0 - sigma)


def sio1_integrand(u, coord, sigma=0.0):
    """kernel_tilde(u, coord, sigma) * z"""
    t = float(coord.t)
    return kernel_tilde(u, coord, sigma) * EvenNumber(math.exp(t), math.exp(-t))


# ----------------------------------------------------------------------
# Principal-value transform
# ----------------------------------------------------------------------

def _trapezoid_rule(grid, lo, hi):
    inside = (grid >= lo) & (grid <= hi)
    nodes = grid[inside]
    if len(nodes) < 2:
        return nodes, np.zeros_like(nodes)
    weights = np.full(len(nodes), nodes[1] - nodes[0])
    weights[0] = weights[-1] = 0.5 * (nodes[1] - nodes[0])
    return nodes, weights


def _component_integral(integrand, nodes, weights):
    values = integrand(nodes)
    bad = ~np.isfinite(values)
    if np.any(bad):
        values = np.where(bad, 0.0, values)
    return float(np.sum(values * weights)), int(np.count_nonzero(bad))


def _excision_sequence(sigma, f, u, q, half):
    """
    Excised integrals over [-half, half] on every branch, one row per radius

    Returns:
        tuple: (array (levels, 2), flags, number of singular components)
    """
    epsilons = np.asarray(q.pv_epsilons)
    outer = epsilons[0]
    knots = f.grid[np.abs(f.grid) <= half]
    sequence = np.zeros((len(epsilons), 2))
    flags = []
    singular = 0

    for branch in BRANCHES:
        sign = branch_sign(branch)
        roots = dict(component_roots(u.u.u1, u.u.u2, sign))
        for component in (0, 1):
            def integrand(t, branch=branch, sign=sign, component=component):
                kernel = sio1_values(u, sign, t, sigma)
                values = f.evaluate(np.full(t.shape, branch), t)
                if component == 0:
                    return kernel.a1 * values.a1
                return kernel.a2 * values.a2

            label = f"branch {branch} p{component + 1}"
            t0 = roots.get(component)
            if t0 is None or abs(t0) >= half + outer:
                if q.rule == 'trapezoid':
                    nodes, weights = _trapezoid_rule(knots, -half, half)
                else:
                    nodes, weights = aligned_rule(-half, half, knots, q.order)
                total, skipped = _component_integral(integrand, nodes, weights)
                sequence[:, component] += total
            else:
                singular += 1
                flags.append(f"{label}: principal value at t={t0:.6g}")
                lo, hi = min(-half, t0 - 2 * outer), max(half, t0 + 2 * outer)
                left = aligned_rule(lo, t0 - outer, knots, q.order, anchor=t0 - outer, first=outer)
                right = aligned_rule(t0 + outer, hi, knots, q.order, anchor=t0 + outer, first=outer)
                far, skipped = _component_integral(integrand, np.concatenate([left[0], right[0]]),
                                                   np.concatenate([left[1], right[1]]))
                sequence[:, component] += far
                for level, epsilon in enumerate(epsilons[1:], start=1):
                    nodes, weights = excised_rule(t0, epsilon, outer, knots, q.order)
                    near, extra = _component_integral(integrand, nodes, weights)
                    sequence[level, component] += near
                    skipped += extra
            if skipped:
                logger.warning(f"{label}: {skipped} quadrature node(s) with undefined integrand skipped")
                flags.append(f"{label}: {skipped} undefined sample(s) skipped")
    return sequence, flags, singular


def cauchy_tilde_pv(sigma, f, u, q=None):
    """
    Hyperbolic transform W_sigma f(u) of a function on tilde-T

    W_sigma f(u) = |1 + u^2|^{1/2} sum_branches PV int k z f(t) dt, each
    principal value by symmetric excision with the radii of q and
    Richardson extrapolation.

    The branch truncation error is estimated by integrating again over
    [-2 T_max, 2 T_max] with f extended by zero beyond its samples; the
    difference is added to the error estimate and kept in
    diagnostics['truncation'].

    Args:
        sigma: real parameter
        f: BoundaryFunction on tilde-T (zero beyond its extent)
        u: TildePoint inside the conformal disk
        q: QuadratureSpec (settings by default)

    Returns:
        TransformResult: EvenNumber value, normalized = value / |1 + u^2|^{1/2}

    Raises:
        OutOfDomain: u not in the open disk
        PVDivergence: the excision sequence does not settle
    """
    if f.domain != Domain.TILDE:
        raise ValueError(f"Hyperbolic transform needs a function on tilde-T, got {f.domain.value}")
    if not isinstance(u, TildePoint):
        raise TypeError("Hyperbolic transform needs a TildePoint")
    if not in_disk(u):
        raise OutOfDomain("Point is not in the open tilde disk", sheet=u.sheet.value, u1=u.u.u1, u2=u.u.u2)
    q = q or QuadratureSpec.from_settings()

    epsilons = np.asarray(q.pv_epsilons)
    half = min(q.t_max, f.extent)
    sequence, flags, singular = _excision_sequence(sigma, f, u, q, half)
    components, estimate, diagnostics = extrapolate_pv(sequence, epsilons)

    truncation = 0.0
    doubled = min(2.0 * q.t_max, f.extent)
    if doubled > half:
        longer, _, _ = _excision_sequence(sigma, f, u, q, doubled)
        extended, _, _ = extrapolate_pv(longer, epsilons)
        truncation = float(np.max(np.abs(np.asarray(extended) - np.asarray(components))))
        if truncation > estimate:
            logger.debug(f"Truncation at T_max={q.t_max} dominates: {truncation:.2e} > {estimate:.2e}")
    diagnostics['truncation'] = truncation
    estimate = estimate + truncation

    scale = math.sqrt(abs(1.0 + u.square()))
    normalized = EvenNumber(float(components[0]), float(components[1]))
    diagnostics['singular_points'] = singular
    logger.debug(f"cauchy_tilde_pv sigma={sigma} at {u}: {normalized.components} "
                 f"(estimate {estimate:.2e}, {singular} singular component(s))")
    return TransformResult(
        normalized * scale,
        estimate * scale,
        pv_epsilon=float(epsilons[-1]) if singular else 0.0,
        flags=tuple(flags),
        normalized=normalized,
        diagnostics=diagnostics,
    )


# ----------------------------------------------------------------------
# Hardy norms
# ----------------------------------------------------------------------

def hardy_norm(F, lam, q=None):
    """
    Squared Hardy norm on the circle T_lambda

    |lambda|^{-2} sum_branches int |F(u(t))|^2 |lambda| dt with
    u(t) = circle_point(lambda, (branch, t)) and |x|^2 = c0^2 + c12^2.

    Args:
        F: callable taking a TildePoint with array coordinates and
            returning an EvenNumber
        lam: circle parameter in [-1, 0)
        q: QuadratureSpec; t_max and order set the panels

    Raises:
        BadRadius: lambda outside [-1, 0)
    """
    q = q or QuadratureSpec.from_settings()
    nodes, weights = aligned_rule(-q.t_max, q.t_max, (), q.order)
    total = 0.0
    for branch in BRANCHES:
        point = circle_point(lam, BranchCoord(branch, nodes))
        values = F(point)
        total += float(np.sum(values.norm_sq() * weights)) * abs(lam)
    return total / lam ** 2
