# representations/lie.py - sl(2,R) and its one-parameter subgroups
"""
sl(2,R) in the basis

    A = 1/2 diag(-1, 1),  B = 1/2 [[0, 1], [1, 0]],  Z = [[0, 1], [-1, 0]]

with [Z, A] = 2B, [Z, B] = -2A, [A, B] = -Z/2.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from moebius.group import GroupElement

logger = logging.getLogger(__name__)

BASIS_MATRICES = {
    'A': np.array([[-0.5, 0.0], [0.0, 0.5]]),
    'B': np.array([[0.0, 0.5], [0.5, 0.0]]),
    'Z': np.array([[0.0, 1.0], [-1.0, 0.0]]),
}


@dataclass(frozen=True)
class LieElement:
    x_a: float = 0.0
    x_b: float = 0.0
    x_z: float = 0.0

    @classmethod
    def from_matrix(cls, matrix):
        """Coordinates of a traceless 2x2 matrix [[p, q], [r, -p]]"""
        matrix = np.asarray(matrix, dtype=float)
        if abs(np.trace(matrix)) > 1e-12:
            raise ValueError("sl(2,R) elements are traceless")
        p, q, r = matrix[0, 0], matrix[0, 1], matrix[1, 0]
        return cls(-2.0 * p, q + r, 0.5 * (q - r))

    @property
    def matrix(self):
        return (self.x_a * BASIS_MATRICES['A'] + self.x_b * BASIS_MATRICES['B']
                + self.x_z * BASIS_MATRICES['Z'])

    @property
    def coefficients(self):
        return np.array([self.x_a, self.x_b, self.x_z])

    def __add__(self, other):
        return LieElement(*(self.coefficients + other.coefficients))

    def __mul__(self, scalar):
        return LieElement(*(self.coefficients * scalar))

    __rmul__ = __mul__

    def bracket(self, other):
        """Matrix commutator [self, other]"""
        x, y = self.matrix, other.matrix
        return LieElement.from_matrix(x @ y - y @ x)

    def is_close(self, other, atol=1e-12):
        return bool(np.allclose(self.coefficients, other.coefficients, rtol=0.0, atol=atol))


A = LieElement(x_a=1.0)
B = LieElement(x_b=1.0)
Z = LieElement(x_z=1.0)


def one_param(element, t):
    """
    exp(t X) as a real group element

    Closed forms: A gives diag(e^{-t/2}, e^{t/2}), B gives the hyperbolic
    rotation by t/2 and Z the rotation [[cos t, sin t], [-sin t, cos t]].
    """
    matrix = expm(t * element.matrix)
    logger.debug(f"one_param({element}, {t}) = {matrix.tolist()}")
    return GroupElement.from_matrix(matrix)
