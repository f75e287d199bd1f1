# representations/boundary.py - Sampled functions on T, tilde-T, the line and the disk
"""
Grid-sampled functions the representations act on.

- circle: complex samples at phi_j = 2 pi j / N, weights 2 pi / N
- tilde: EvenNumber samples of shape (4, N), one row per branch of
  tilde-T, uniform t grid on [-T_max, T_max] with trapezoid weights
- line: complex samples on a uniform grid of [-L, L]

Off-grid values come from periodic cubic splines (circle), per-branch
not-a-knot cubic splines extended by zero beyond T_max (tilde, line) or
trigonometric interpolation through the FFT (circle only).

Disk functions keep their evaluator next to a polar quadrature grid, so
pulling them back along a Moebius map is exact composition.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property

import numpy as np
from scipy.interpolate import CubicSpline

from clifford.algebra import EvenNumber
from core.conf import r11_setting
from core.numerics import panel_rule
from moebius.geometry import BRANCHES

logger = logging.getLogger(__name__)

INTERPOLATIONS = ('cubic', 'fourier')


class Domain(str, Enum):
    CIRCLE = 'circle'
    TILDE = 'tilde'
    LINE = 'line'


def _trapezoid_weights(n, spacing):
    weights = np.full(n, spacing)
    weights[0] = weights[-1] = 0.5 * spacing
    return weights


def _resolve_interpolation(interpolation, domain):
    if interpolation is None:
        interpolation = r11_setting('INTERPOLATION') if domain == Domain.CIRCLE else 'cubic'
    if interpolation not in INTERPOLATIONS:
        raise ValueError(f"Unknown interpolation '{interpolation}'; expected one of {INTERPOLATIONS}")
    return interpolation


@dataclass(frozen=True, eq=False)
class BoundaryFunction:
    """
    Samples of a function on a uniform boundary grid

    Attributes:
        domain: Domain tag
        values: complex array (circle, line) or EvenNumber of (4, N) arrays
        extent: T_max on tilde-T, half-width L on the line
        flags: grid points skipped by the last operation; ints on the
            circle and line, (branch, index) pairs on tilde-T
    """

    domain: Domain
    values: object
    extent: float = 0.0
    flags: tuple = field(default=())

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def on_circle(cls, func, n=None):
        """Sample func(phi) at N equispaced angles"""
        n = n or r11_setting('CIRCLE_POINTS')
        phi = 2.0 * np.pi * np.arange(n) / n
        return cls(Domain.CIRCLE, np.asarray(func(phi), dtype=complex) * np.ones(n))

    @classmethod
    def on_tilde(cls, func, n=None, t_max=None):
        """
        Sample func(branch, t) on every branch

        func receives an integer branch and the t array and returns an
        EvenNumber (or a real array, taken as a scalar function).
        """
        n = n or r11_setting('BRANCH_POINTS')
        t_max = t_max or r11_setting('T_MAX')
        t = np.linspace(-t_max, t_max, n)
        rows = [func(branch, t) for branch in BRANCHES]
        rows = [row if isinstance(row, EvenNumber) else EvenNumber.scalar(np.asarray(row, dtype=float))
                for row in rows]
        a1 = np.stack([np.broadcast_to(row.a1, t.shape) for row in rows]).astype(float)
        a2 = np.stack([np.broadcast_to(row.a2, t.shape) for row in rows]).astype(float)
        return cls(Domain.TILDE, EvenNumber(a1, a2), extent=float(t_max))

    @classmethod
    def on_line(cls, func, n=None, half_width=10.0):
        n = n or r11_setting('BRANCH_POINTS')
        x = np.linspace(-half_width, half_width, n)
        return cls(Domain.LINE, np.asarray(func(x), dtype=complex) * np.ones(n), extent=float(half_width))

    def with_values(self, values, flags=()):
        return replace(self, values=values, flags=tuple(flags))

    # ------------------------------------------------------------------
    # Grid
    # ------------------------------------------------------------------

    @property
    def size(self):
        if self.domain == Domain.TILDE:
            return self.values.a1.shape[-1]
        return len(self.values)

    @cached_property
    def grid(self):
        """Angles, t values or x values of the samples"""
        if self.domain == Domain.CIRCLE:
            return 2.0 * np.pi * np.arange(self.size) / self.size
        return np.linspace(-self.extent, self.extent, self.size)

    @property
    def spacing(self):
        if self.domain == Domain.CIRCLE:
            return 2.0 * np.pi / self.size
        return 2.0 * self.extent / (self.size - 1)

    @cached_property
    def weights(self):
        """Quadrature weights; dphi of total mass 2 pi on the circle"""
        if self.domain == Domain.CIRCLE:
            return np.full(self.size, self.spacing)
        return _trapezoid_weights(self.size, self.spacing)

    # ------------------------------------------------------------------
    # Interpolation
    # ------------------------------------------------------------------

    @cached_property
    def _spline(self):
        if self.domain == Domain.CIRCLE:
            phi = np.append(self.grid, 2.0 * np.pi)
            stacked = np.column_stack([self.values.real, self.values.imag])
            stacked = np.vstack([stacked, stacked[:1]])
            return CubicSpline(phi, stacked, bc_type='periodic')
        if self.domain == Domain.LINE:
            return CubicSpline(self.grid, np.column_stack([self.values.real, self.values.imag]))
        return [CubicSpline(self.grid, np.column_stack([self.values.a1[b], self.values.a2[b]]))
                for b in BRANCHES]

    @cached_property
    def _fourier(self):
        coefficients = np.fft.fft(self.values) / self.size
        frequencies = np.fft.fftfreq(self.size, d=1.0 / self.size)
        return coefficients, frequencies

    def evaluate(self, points, t=None, interpolation=None):
        """
        Values at arbitrary points

        Args:
            points: angles (circle), x values (line) or branch indices
                (tilde, with t given separately)
            t: t values on tilde-T, broadcast against the branches
            interpolation: 'cubic' or 'fourier' (circle only)

        Returns:
            complex array, or EvenNumber on tilde-T
        """
        interpolation = _resolve_interpolation(interpolation, self.domain)
        if self.domain == Domain.CIRCLE:
            phi = np.mod(np.asarray(points, dtype=float), 2.0 * np.pi)
            if interpolation == 'fourier':
                coefficients, frequencies = self._fourier
                return np.exp(1j * np.multiply.outer(phi, frequencies)) @ coefficients
            pair = self._spline(phi)
            return pair[..., 0] + 1j * pair[..., 1]

        if interpolation == 'fourier':
            raise ValueError("Fourier interpolation is only available on the circle")

        if self.domain == Domain.LINE:
            x = np.asarray(points, dtype=float)
            inside = np.abs(x) <= self.extent
            result = np.zeros(x.shape, dtype=complex)
            pair = self._spline(x[inside])
            result[inside] = pair[..., 0] + 1j * pair[..., 1]
            return result

        branch, t = np.broadcast_arrays(np.asarray(points), np.asarray(t, dtype=float))
        a1 = np.zeros(t.shape)
        a2 = np.zeros(t.shape)
        for b in BRANCHES:
            mask = (branch == b) & (np.abs(t) <= self.extent)
            if np.any(mask):
                pair = self._spline[b](t[mask])
                a1[mask] = pair[..., 0]
                a2[mask] = pair[..., 1]
        return EvenNumber(a1, a2)

    # ------------------------------------------------------------------
    # Norms
    # ------------------------------------------------------------------

    def norm(self):
        """L2 norm; tilde-T uses the Euclidean modulus c0^2 + c12^2"""
        if self.domain == Domain.TILDE:
            return float(np.sqrt(np.sum(self.values.norm_sq() * self.weights[None, :])))
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2 * self.weights)))

    def inner(self, other):
        """Integral of f conj(g) for complex valued samples"""
        if self.domain == Domain.TILDE:
            raise TypeError("Use clifford_inner for tilde-T functions")
        return complex(np.sum(self.values * np.conj(other.values) * self.weights))

    def max_difference(self, other):
        if self.domain == Domain.TILDE:
            return float(max(np.max(np.abs(self.values.a1 - other.values.a1)),
                             np.max(np.abs(self.values.a2 - other.values.a2))))
        return float(np.max(np.abs(self.values - other.values)))


# ----------------------------------------------------------------------
# Disk
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PolarGrid:
    """Gauss-Legendre in r on [0, 1] times uniform angles"""

    radial: int = 0
    angular: int = 0

    @classmethod
    def from_settings(cls):
        return cls(r11_setting('BERGMAN_RADIAL'), r11_setting('BERGMAN_ANGULAR'))

    @cached_property
    def _nodes(self):
        r, w_r = panel_rule(np.linspace(0.0, 1.0, max(2, self.radial // 16 + 1)), 16)
        phi = 2.0 * np.pi * np.arange(self.angular) / self.angular
        radius, angle = np.meshgrid(r, phi, indexing='ij')
        area = np.multiply.outer(w_r * r, np.full(self.angular, 2.0 * np.pi / self.angular))
        return (radius * np.exp(1j * angle)).ravel(), area.ravel()

    @property
    def points(self):
        return self._nodes[0]

    @property
    def area_weights(self):
        """r dr dphi"""
        return self._nodes[1]


@dataclass(frozen=True, eq=False)
class DiskFunction:
    """Function on the unit disk: an evaluator plus the grid it is sampled on"""

    func: object
    grid: PolarGrid = field(default_factory=PolarGrid.from_settings)

    @cached_property
    def values(self):
        return np.asarray(self.func(self.grid.points), dtype=complex)

    def __call__(self, w):
        return self.func(w)

    def inner(self, other, m):
        """Weighted inner product with d mu_m = 4^{1-m} (1 - |w|^2)^{m-2} dA"""
        w = self.grid.points
        weight = 4.0 ** (1 - m) * (1.0 - np.abs(w) ** 2) ** (m - 2) * self.grid.area_weights
        return complex(np.sum(self.values * np.conj(other.values) * weight))

    def norm(self, m):
        return float(np.sqrt(self.inner(self, m).real))
