# taylor/hyperbolic.py - Integer-part and geometric decompositions of the hyperbolic kernel
"""
Taylor machinery of the hyperbolic theory.

In idempotent components e1 u = a1 p1 + a2 p2 with a1 = -u1 + u2,
a2 = -u1 - u2, and z = exp(e1e2 t) has exponents s = (t, -t). The
kernel (-e1 u + z)^{-1} has components 1 / (e^{s_j} - a_j), and each
component is the Laplace-table integral

    1 / (e^s - a) = s int_0^inf (a^[p] - 1) / (a - 1) e^{-s p} dp

summed interval by interval in closed form. A component converges
classically iff s_j > 0 and |a_j| e^{-s_j} < 1; otherwise its value is
the analytic continuation of the same interval series and is flagged
'continued'.
"""

import logging
import math

import numpy as np

from clifford.algebra import EvenNumber
from core.conf import r11_setting
from core.numerics import panel_rule
from moebius.geometry import BRANCHES, BranchCoord, TildePoint, branch_sign
from representations.boundary import Domain
from .coefficients import TaylorCoefficients
from .exceptions import ConvergenceError, NonInvertible

logger = logging.getLogger(__name__)

# Interval count cap for the piecewise-exact sums
MAX_INTERVALS = 100000

# Geometric tail below which a sum is considered complete
TAIL = 1e-17


def _on_boundary(rate):
    return math.isclose(rate, 1.0, rel_tol=r11_setting('LIGHT_CONE_RTOL'))


def _vector(u):
    return u.u if isinstance(u, TildePoint) else u


def _coordinate(t):
    """(sign, t) from a BranchCoord or a bare principal-branch t"""
    if isinstance(t, BranchCoord):
        return t.sign, float(t.t)
    return 1, float(t)


def e1u_components(u, sign=1):
    """Idempotent components (a1, a2) of e1 (sign u)"""
    u = _vector(u)
    return sign * (-u.u1 + u.u2), sign * (-u.u1 - u.u2)


def _interval_count(rate, intervals):
    if intervals is not None:
        return int(intervals)
    if rate <= 0.0:
        return 1
    return min(MAX_INTERVALS, int(math.ceil(math.log(TAIL) / math.log(rate))) + 1)


def interval_series(a, k, t, intervals=None):
    """
    sum_j (a^j - 1)/(a - 1) int_{jk}^{(j+1)k} e^{-t p} dp

    Each interval is integrated exactly; with r = e^{-tk} the term is
    ((a r)^j - r^j) / (a - 1) * (1 - r) / t, or j r^j (1 - r) / t at a = 1.

    Returns:
        tuple: (sum, number of intervals)
    """
    r = math.exp(-t * k)
    count = _interval_count(max(abs(a) * r, r), intervals)
    j = np.arange(count)
    if a == 1.0:
        weights = j * r ** j
    else:
        weights = (np.power(a * r, j) - np.power(r, j)) / (a - 1.0)
    return math.fsum(weights * (1.0 - r) / t), count


def laplace_table_check(a, k, t, intervals=None):
    """
    Both sides of 1/(t(e^{kt} - a)) = int_0^inf (a^[p/k] - 1)/(a - 1) e^{-tp} dp

    Args:
        a: real, |a| < e^{kt}; a = 1 uses the limit [p/k]
        k: interval length > 0
        t: decay rate > 0
        intervals: number of intervals summed (enough for a 1e-17 tail
            by default)

    Returns:
        tuple: (lhs, rhs)

    Raises:
        ConvergenceError: |a| >= e^{kt} or t <= 0
    """
    if k <= 0:
        raise ValueError(f"Interval length must be positive, got {k}")
    if t <= 0:
        raise ConvergenceError("Laplace table needs t > 0", t=t)
    rate = abs(a) * math.exp(-k * t)
    if rate >= 1.0 or _on_boundary(rate):
        raise ConvergenceError("Laplace table diverges for |a| >= e^{kt}", a=a, k=k, t=t)

    lhs = 1.0 / (t * (math.exp(k * t) - a))
    rhs, count = interval_series(a, k, t, intervals)
    logger.debug(f"Laplace table a={a} k={k} t={t}: |lhs - rhs| = {abs(lhs - rhs):.2e} over {count} intervals")
    return lhs, rhs


# ----------------------------------------------------------------------
# Kernel decompositions
# ----------------------------------------------------------------------

def _component(a, s):
    """Value and mode ('classical' or 'continued') of one kernel component"""
    if a == 1.0:
        raise NonInvertible("e1 u - 1 has a vanishing component", a=a)
    if s == 0.0:
        raise ConvergenceError("Component exponent vanishes", a=a, s=s)
    rate = abs(a) * math.exp(-s)
    if _on_boundary(rate):
        raise ConvergenceError("Component on the boundary of convergence", a=a, s=s)
    if s > 0 and rate < 1.0:
        total, _ = interval_series(a, 1.0, s)
        return s * total, 'classical'
    # closed form of the same geometric series, continued past its radius
    r = math.exp(-s)
    return r / (1.0 - a * r), 'continued'


def hyperbolic_expand(u, t, with_flags=False):
    """
    Kernel (-e1 u + z)^{-1} through the integer-part decomposition

    Args:
        u: TildePoint or Vector11
        t: branch parameter, or a BranchCoord (its sign replaces u by sign u)
        with_flags: also return the per-component modes

    Returns:
        EvenNumber, or (EvenNumber, flags) where flags lists the
        components evaluated by continuation

    Raises:
        ConvergenceError: a component with s = 0 or |a| e^{-s} = 1
        NonInvertible: a component of e1 u equals 1
    """
    sign, t = _coordinate(t)
    values, flags = [], []
    for index, (a, s) in enumerate(zip(e1u_components(u, sign), (t, -t))):
        value, mode = _component(a, s)
        values.append(value)
        if mode == 'continued':
            flags.append(f"p{index + 1}: continued")
    result = EvenNumber(values[0], values[1])
    if flags:
        logger.debug(f"hyperbolic_expand at {_vector(u)}, t={t}: {', '.join(flags)}")
    if with_flags:
        return result, tuple(flags)
    return result


def geometric_expand(u, t, J):
    """
    Partial sums of sum_j (e1 u)^j z^{-j-1}

    Args:
        u: TildePoint or Vector11
        t: branch parameter or BranchCoord
        J: last power included

    Returns:
        tuple: (EvenNumber of the J + 1 partial sums, empirical ratio of
        the last two terms)

    Raises:
        ConvergenceError: |a_j| e^{-s_j} >= 1 in some component
    """
    if J < 0:
        raise ValueError(f"J must be non-negative, got {J}")
    sign, t = _coordinate(t)
    powers = np.arange(J + 1)
    sums, ratio = [], 0.0
    for a, s in zip(e1u_components(u, sign), (t, -t)):
        rate = abs(a) * math.exp(-s)
        if rate >= 1.0 or _on_boundary(rate):
            raise ConvergenceError("Geometric decomposition diverges", a=a, s=s, rate=rate)
        terms = np.power(a, powers) * np.exp(-s * (powers + 1))
        sums.append(np.cumsum(terms))
        if J >= 1 and terms[-2] != 0.0:
            ratio = max(ratio, abs(terms[-1] / terms[-2]))
    return EvenNumber(sums[0], sums[1]), ratio


# ----------------------------------------------------------------------
# Mellin-type coefficients
# ----------------------------------------------------------------------

def _mellin_rows(t, weights, values, exponent_sign, p):
    """sum_t w s e^{s(1 - p)} f(t) for s = exponent_sign * t, one entry per p"""
    mask = values != 0
    if not np.any(mask):
        return np.zeros(np.shape(p))
    s = exponent_sign * t[mask]
    with np.errstate(over='ignore', invalid='ignore'):
        kernel = s * np.exp(np.multiply.outer(1.0 - np.atleast_1d(p), s))
        rows = kernel @ (weights[mask] * values[mask])
    bad = ~np.isfinite(rows)
    if np.any(bad):
        logger.warning(f"Mellin coefficient overflowed at {np.count_nonzero(bad)} value(s) of p; set to 0")
        rows = np.where(bad, 0.0, rows)
    return rows.reshape(np.shape(p))


def _require_tilde(f):
    if f.domain != Domain.TILDE:
        raise ValueError(f"Mellin coefficients need a function on tilde-T, got {f.domain.value}")


def mellin_coefficient(f, p):
    """
    f_p = int t z^{-p} dz f(z) with dz = e1e2 z dt, summed over branches

    In components t z^{-p} e1e2 z = (t e^{(1-p)t}, -t e^{(p-1)t}), that is
    s e^{s(1-p)} with s = (t, -t). The trapezoid rule of the sample grid
    is used on each branch.

    Returns:
        EvenNumber (arrays when p is an array)
    """
    _require_tilde(f)
    first = sum(_mellin_rows(f.grid, f.weights, f.values.a1[b], 1.0, p) for b in BRANCHES)
    second = sum(_mellin_rows(f.grid, f.weights, f.values.a2[b], -1.0, p) for b in BRANCHES)
    return EvenNumber(first, second)


def mellin_coefficients(f, p_grid):
    """Mellin coefficients on a grid of p >= 0"""
    p_grid = np.asarray(p_grid, dtype=float)
    values = mellin_coefficient(f, p_grid)
    return TaylorCoefficients('continuous', p_grid, values)


def hyperbolic_taylor_value(f, u, order=12, max_intervals=400):
    """
    Normalized sigma = 0 transform of f at u from its Taylor decomposition

    sum over branches of int_0^inf (a^[p] - 1)/(a - 1) f_p dp per
    component, with branchwise Mellin coefficients f_p and Gauss-Legendre
    in p on every interval [j, j + 1).

    Raises:
        ConvergenceError: the support of f reaches s <= 0 or |a| e^{-s} >= 1
        NonInvertible: a component of e1 u equals 1
    """
    _require_tilde(f)
    u = _vector(u)
    totals = [0.0, 0.0]
    for branch in BRANCHES:
        components = e1u_components(u, branch_sign(branch))
        rows = (f.values.a1[branch], f.values.a2[branch])
        for index, (a, exponent_sign, values) in enumerate(zip(components, (1.0, -1.0), rows)):
            support = values != 0
            if not np.any(support):
                continue
            if a == 1.0:
                raise NonInvertible("e1 u - 1 has a vanishing component", a=a, branch=branch)
            s_min = float(np.min(exponent_sign * f.grid[support]))
            rate = abs(a) * math.exp(-s_min)
            if s_min <= 0 or rate >= 1.0 or _on_boundary(rate):
                raise ConvergenceError("Taylor decomposition does not converge on the support of f",
                                       branch=branch, component=index + 1, a=a, s_min=s_min)
            count = min(max_intervals, _interval_count(max(abs(a), 1.0) * math.exp(-s_min), None))
            p, w = panel_rule(np.arange(count + 1, dtype=float), order)
            j = np.floor(p)
            weights = j if a == 1.0 else (np.power(a, j) - 1.0) / (a - 1.0)
            mellin = _mellin_rows(f.grid, f.weights, values, exponent_sign, p)
            totals[index] += float(np.sum(w * weights * mellin))
    return EvenNumber(totals[0], totals[1])
