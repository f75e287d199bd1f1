# transforms/quadrature.py - Quadrature settings, results and principal values
"""
Plumbing shared by the transforms.

- QuadratureSpec: sample count, branch truncation, excision radii, rule
- TransformResult: value with its error estimate and flags
- aligned_rule: Gauss-Legendre panels with a breakpoint at every sample
  knot, optionally graded away from a singularity
- extrapolate_pv: Richardson extrapolation of a symmetric-excision
  sequence, raising PVDivergence when it does not settle
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from clifford.algebra import EvenNumber
from core.conf import r11_setting
from core.numerics import graded_breaks, observed_order, panel_rule, richardson_table, uniform_breaks
from .exceptions import PVDivergence

logger = logging.getLogger(__name__)

RULES = ('trapezoid', 'adaptive')

# Widest Gauss-Legendre panel used away from singularities
MAX_PANEL_WIDTH = 0.25


@dataclass(frozen=True)
class QuadratureSpec:
    """
    Quadrature parameters of one transform evaluation

    Attributes:
        n: points per branch or on the circle
        t_max: branch truncation
        pv_epsilons: excision radii, strictly decreasing, all positive
        rule: 'adaptive' (knot-aligned Gauss-Legendre panels) or
            'trapezoid' (sample grid, used where the integrand is regular)
        order: Gauss-Legendre panel order
    """

    n: int = 2048
    t_max: float = 12.0
    pv_epsilons: tuple = (0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125, 0.0015625)
    rule: str = 'adaptive'
    order: int = 16

    def __post_init__(self):
        object.__setattr__(self, 'pv_epsilons', tuple(float(e) for e in self.pv_epsilons))
        if self.n < 16:
            raise ValueError(f"Quadrature needs at least 16 points, got {self.n}")
        if self.t_max <= 0:
            raise ValueError(f"Branch truncation must be positive, got {self.t_max}")
        epsilons = np.asarray(self.pv_epsilons)
        if epsilons.size == 0 or np.any(epsilons <= 0) or np.any(np.diff(epsilons) >= 0):
            raise ValueError("Excision radii must be positive and strictly decreasing")
        if self.rule not in RULES:
            raise ValueError(f"Unknown rule '{self.rule}'; expected one of {RULES}")
        if self.order < 2:
            raise ValueError("Gauss-Legendre order must be at least 2")

    @classmethod
    def from_settings(cls, **overrides):
        """
        Spec built from R11_SETTINGS

        Args:
            **overrides: any field, plus pv_epsilon0 / pv_levels to rebuild
                the halving sequence eps_k = eps0 * 2^-k, k = 0..levels
        """
        epsilon0 = overrides.pop('pv_epsilon0', r11_setting('PV_EPSILON0'))
        levels = overrides.pop('pv_levels', r11_setting('PV_LEVELS'))
        values = {
            'n': r11_setting('BRANCH_POINTS'),
            't_max': r11_setting('T_MAX'),
            'pv_epsilons': tuple(epsilon0 * 2.0 ** -k for k in range(levels + 1)),
            'order': r11_setting('GAUSS_ORDER'),
        }
        values.update(overrides)
        return cls(**values)


@dataclass(frozen=True)
class TransformResult:
    """
    Outcome of one transform evaluation

    Attributes:
        value: complex (disk models) or EvenNumber (tilde model)
        quadrature_error_estimate: non-negative error estimate of value
        pv_epsilon: smallest excision radius used, 0 without principal values
        flags: notes on near-singular or skipped parts of the integral
        normalized: the analytic value f(a) on the disk, W / |1 + u^2|^{1/2}
            on tilde-D
        diagnostics: Richardson steps, observed order and similar
    """

    value: object
    quadrature_error_estimate: float = 0.0
    pv_epsilon: float = 0.0
    flags: tuple = ()
    normalized: object = None
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.quadrature_error_estimate >= 0:
            raise ValueError(f"Error estimate must be non-negative, got {self.quadrature_error_estimate}")

    @property
    def components(self):
        """(re, im) of a complex value or (p1, p2) of an even number"""
        if isinstance(self.value, EvenNumber):
            return float(self.value.a1), float(self.value.a2)
        value = complex(self.value)
        return value.real, value.imag


# ----------------------------------------------------------------------
# Panel rules
# ----------------------------------------------------------------------

def aligned_rule(lo, hi, knots, order, anchor=None, first=None, max_width=MAX_PANEL_WIDTH):
    """
    Composite Gauss-Legendre rule on [lo, hi] with a breakpoint at every knot

    Inside every panel a cubic-spline sample is a single polynomial. With
    an anchor (lo or hi, next to a singularity) the panels double in width
    away from it, starting at `first`.

    Returns:
        tuple: (nodes, weights), empty when hi <= lo
    """
    if hi <= lo:
        return np.empty(0), np.empty(0)
    knots = np.asarray(knots, dtype=float)
    pieces = [np.array([lo, hi]), knots[(knots > lo) & (knots < hi)], uniform_breaks(lo, hi, max_width)]
    if anchor is not None:
        other = hi if anchor == lo else lo
        pieces.append(graded_breaks(anchor, other, first, max_width))
    breaks = np.unique(np.concatenate(pieces))
    breaks = breaks[(breaks >= lo) & (breaks <= hi)]
    return panel_rule(breaks, order)


def excised_rule(center, inner, outer, knots, order):
    """
    Rule on [center - outer, center - inner] and [center + inner, center + outer]

    Both halves are graded away from the excised interval, so a 1/(t - center)
    singularity is integrated to full precision on each side.
    """
    left = aligned_rule(center - outer, center - inner, knots, order, anchor=center - inner, first=inner)
    right = aligned_rule(center + inner, center + outer, knots, order, anchor=center + inner, first=inner)
    return np.concatenate([left[0], right[0]]), np.concatenate([left[1], right[1]])


# ----------------------------------------------------------------------
# Principal values
# ----------------------------------------------------------------------

def extrapolate_pv(sequence, epsilons):
    """
    Richardson extrapolation of a symmetric-excision sequence

    Symmetric excision leaves an error expansion in odd powers of eps, so
    the columns remove eps and eps^3.

    Args:
        sequence: array (levels, components) of excised integrals I(eps_k)
        epsilons: the radii eps_k

    Returns:
        tuple: (extrapolated components, error estimate, diagnostics dict)

    Raises:
        PVDivergence: the step |I_k - I_{k-1}| never decreases
    """
    sequence = np.atleast_2d(np.asarray(sequence, dtype=float))
    if len(sequence) == 1:
        return sequence[0], 0.0, {'steps': []}

    steps = np.max(np.abs(np.diff(sequence, axis=0)), axis=1)
    scale = 1.0 + float(np.max(np.abs(sequence[-1])))
    if len(steps) >= 2 and steps[-1] > 1e-12 * scale and np.all(steps[1:] >= 0.95 * steps[:-1]):
        raise PVDivergence("Excision sequence does not settle", steps=steps.tolist())

    diagnostics = {'steps': steps.tolist(), 'observed_order': observed_order(steps)}
    epsilons = np.asarray(epsilons, dtype=float)
    if not np.allclose(epsilons[1:] / epsilons[:-1], 0.5):
        logger.debug("Excision radii are not a halving sequence; Richardson skipped")
        return sequence[-1], float(steps[-1]), diagnostics

    table = richardson_table(sequence, orders=(1, 3))
    best = table[-1]
    estimate = np.abs(best[-1] - table[-2][-1])
    if len(best) >= 2:
        estimate = np.maximum(estimate, np.abs(best[-1] - best[-2]))
    logger.debug(f"Richardson columns (last entries): {[column[-1].tolist() for column in table]}")
    return best[-1], float(np.max(estimate)), diagnostics
