# moebius/geometry.py - Double cover of R^{1,1}, conformal disk and circles
"""
Points of the two-sheeted cover carry a sheet tag and a vector u.

The conformal unit disk is
    (plus sheet and u^2 < -1) or (minus sheet and u^2 > -1),
its boundary, the four-branch unit circle, is u^2 = -1 on both sheets.
Branch numbering: branch = 2 * sheet_bit + sign_bit, where sign_bit
selects the sign of the e1 factor in u = +-e1 exp(e1e2 t).
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from clifford.algebra import Vector11
from .exceptions import BadRadius, OutOfDomain

logger = logging.getLogger(__name__)

BRANCHES = (0, 1, 2, 3)


class Sheet(str, Enum):
    PLUS = 'plus'
    MINUS = 'minus'

    @property
    def bit(self):
        return 0 if self is Sheet.PLUS else 1

    def flipped(self):
        return Sheet.MINUS if self is Sheet.PLUS else Sheet.PLUS


@dataclass(frozen=True)
class TildePoint:
    sheet: Sheet
    u: Vector11

    @classmethod
    def from_coordinates(cls, sheet, u1, u2):
        return cls(Sheet(sheet), Vector11(float(u1), float(u2)))

    def square(self):
        return self.u.square()

    def is_close(self, other, atol=1e-10):
        return self.sheet == other.sheet and self.u.is_close(other.u, atol=atol)


@dataclass(frozen=True)
class BranchCoord:
    branch: int
    t: float

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"Branch must be one of {BRANCHES}, got {self.branch}")

    @classmethod
    def from_parts(cls, sheet, sign, t):
        sign_bit = 0 if sign > 0 else 1
        return cls(2 * Sheet(sheet).bit + sign_bit, t)

    @property
    def sheet(self):
        return Sheet.PLUS if self.branch < 2 else Sheet.MINUS

    @property
    def sign(self):
        """Sign of the e1 factor"""
        return 1 if self.branch % 2 == 0 else -1


def branch_sheet(branch):
    return Sheet.PLUS if branch < 2 else Sheet.MINUS


def branch_sign(branch):
    return 1 if branch % 2 == 0 else -1


def in_disk(point):
    """Membership in the open conformal unit disk"""
    square = point.square()
    if point.sheet is Sheet.PLUS:
        return bool(square < -1.0)
    return bool(square > -1.0)


def circle_vector(sign, radius, t):
    """sign * radius * e1 exp(e1e2 t) = sign * radius * (cosh t e1 - sinh t e2)"""
    return Vector11(sign * radius * np.cosh(t), -sign * radius * np.sinh(t))


def circle_point(lam, coord):
    """
    Point of the circle T_lambda on the given branch

    The plus sheet carries radius |lambda| (u^2 = -lambda^2), the minus
    sheet radius 1/|lambda| (u^2 = -lambda^-2); lambda = -1 gives the
    unit circle.

    Raises:
        BadRadius: lambda outside [-1, 0)
    """
    if not -1.0 <= lam < 0.0:
        raise BadRadius("Circle parameter must lie in [-1, 0)", lam=lam)
    radius = abs(lam) if coord.sheet is Sheet.PLUS else 1.0 / abs(lam)
    return TildePoint(coord.sheet, circle_vector(coord.sign, radius, coord.t))


def branch_of(point):
    """
    Branch coordinate of a point with u^2 < 0

    Inverse of circle_point up to the radius: the sign comes from u1 and
    t from the normalized e2 component.
    """
    u = point.u
    square = u.square()
    if square >= 0:
        raise ValueError("Point is not on a circle T_lambda (u^2 >= 0)")
    radius = math.sqrt(-square)
    sign = 1 if u.u1 > 0 else -1
    t = math.asinh(-sign * u.u2 / radius)
    return BranchCoord.from_parts(point.sheet, sign, t)


def component_roots(u1, u2, sign):
    """
    Zeros of the two idempotent components of the Cauchy denominator

    On a branch with e1 sign `sign` the components are
    e^t + sign (u1 - u2) and e^-t + sign (u1 + u2).

    Returns:
        list: (component index 0 or 1, t) for each real zero
    """
    roots = []
    first = -sign * (u1 - u2)
    if first > 0:
        roots.append((0, math.log(first)))
    second = -sign * (u1 + u2)
    if second > 0:
        roots.append((1, -math.log(second)))
    return roots


def singular_points(point):
    """
    Branch coordinates where the hyperbolic Cauchy kernel is singular

    Both sheets carry the same kernel, so every root appears once per
    sheet; at most four in total.

    Raises:
        OutOfDomain: point outside the open tilde disk
    """
    if not in_disk(point):
        raise OutOfDomain("Singular points need a point of the open tilde disk",
                          sheet=point.sheet.value, u1=point.u.u1, u2=point.u.u2)
    u = point.u
    result = []
    for branch in BRANCHES:
        for _, t in component_roots(u.u1, u.u2, branch_sign(branch)):
            result.append(BranchCoord(branch, t))
    logger.debug(f"Singular points of {point}: {len(result)}")
    return result
