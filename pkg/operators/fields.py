# operators/fields.py - Functions on the four models, differentiated by central differences
"""
FieldSample couples a point evaluator with a finite-difference step.

Coordinates (x1, x2) behind the partial derivatives d1, d2:
- halfplane, disk: x1 = Re z, x2 = Im z
- tilde_halfplane: the point e1 y + e2 x, x1 = x, x2 = y
- tilde_disk: x1 = u1, x2 = u2

Complex models return complex values; the tilde models accept any
Cl(1,1) value from the evaluator and hand derivatives back as Cliff11.
"""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from clifford.algebra import Cliff11, Vector11, as_cliff
from core.conf import r11_setting
from core.numerics import central_difference, second_difference
from moebius.exceptions import OutOfDomain
from moebius.geometry import TildePoint, in_disk

logger = logging.getLogger(__name__)

DOMAINS = ('halfplane', 'tilde_halfplane', 'disk', 'tilde_disk')
COMPLEX_DOMAINS = ('halfplane', 'disk')
HALFPLANES = ('halfplane', 'tilde_halfplane')

_AXES = (np.array([1.0, 0.0]), np.array([0.0, 1.0]))


@dataclass(frozen=True)
class FieldSample:
    """
    A function on one model with its difference step

    Attributes:
        domain: 'halfplane', 'tilde_halfplane', 'disk' or 'tilde_disk'
        evaluator: point -> value; points are complex on the complex
            models, Vector11 or TildePoint on the tilde models
        step: difference step h > 0 (FD_STEP by default)
    """

    domain: str
    evaluator: Callable
    step: float = None

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise ValueError(f"Unknown domain '{self.domain}'; expected one of {DOMAINS}")
        step = r11_setting('FD_STEP') if self.step is None else float(self.step)
        if not step > 0:
            raise ValueError(f"Difference step must be positive, got {step}")
        object.__setattr__(self, 'step', step)

    @property
    def clifford_valued(self):
        return self.domain not in COMPLEX_DOMAINS

    def with_evaluator(self, evaluator, step=None):
        return FieldSample(self.domain, evaluator, self.step if step is None else step)

    # ------------------------------------------------------------------
    # Points and coordinates
    # ------------------------------------------------------------------

    def coordinates(self, point):
        if self.domain in COMPLEX_DOMAINS:
            z = complex(point)
            return np.array([z.real, z.imag])
        u = point.u if isinstance(point, TildePoint) else point
        if self.domain == 'tilde_halfplane':
            return np.array([float(u.u2), float(u.u1)])
        return np.array([float(u.u1), float(u.u2)])

    def point_at(self, like, coordinates):
        """Point with the given coordinates, of the same kind as `like`"""
        x1, x2 = float(coordinates[0]), float(coordinates[1])
        if self.domain in COMPLEX_DOMAINS:
            return complex(x1, x2)
        u = Vector11(x2, x1) if self.domain == 'tilde_halfplane' else Vector11(x1, x2)
        if isinstance(like, TildePoint):
            return TildePoint(like.sheet, u)
        return u

    def height(self, point):
        """y of a half-plane point"""
        return float(self.coordinates(point)[1])

    def check_interior(self, point):
        """
        Raises:
            OutOfDomain: y <= 0 on a half plane, or outside the disk
        """
        if self.domain in HALFPLANES:
            if self.height(point) <= 0:
                raise OutOfDomain(f"Point is not in the open {self.domain}", point=point)
        elif self.domain == 'disk':
            if abs(complex(point)) >= 1.0:
                raise OutOfDomain("Point is not in the open unit disk", point=point)
        elif isinstance(point, TildePoint) and not in_disk(point):
            raise OutOfDomain("Point is not in the open tilde disk", point=point)

    # ------------------------------------------------------------------
    # Values and derivatives
    # ------------------------------------------------------------------

    def encode(self, value):
        if self.clifford_valued:
            return as_cliff(value).coefficients.astype(float)
        return np.asarray(complex(value))

    def decode(self, array):
        if self.clifford_valued:
            return Cliff11(*(float(c) for c in np.asarray(array)))
        return complex(array)

    def value(self, point):
        return self.encode(self.evaluator(point))

    def _along(self, point):
        return lambda coordinates: self.value(self.point_at(point, coordinates))

    def partial(self, point, axis, h=None):
        """Central difference d_axis f at point, as an encoded array"""
        h = self.step if h is None else h
        return central_difference(self._along(point), self.coordinates(point), h, _AXES[axis])

    def second_partial(self, point, axis, h=None):
        h = self.step if h is None else h
        return second_difference(self._along(point), self.coordinates(point), h, _AXES[axis])
