# moebius/group.py - Three realizations of SL(2,R)
"""
2x2 group elements tagged by realization:

- REAL: real entries, ad - bc = 1
- SU11: complex entries [[alpha, beta], [conj(beta), conj(alpha)]]
- CL11: Cl(1,1) entries; for the Cayley image the form is
  [[na, nb], [-nb, na]] with na even and nb a vector

Conversions (to_su11, cayley) are conjugations, hence homomorphisms.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from clifford.algebra import Cliff11, EvenNumber, Vector11, as_cliff, mul
from core.conf import r11_setting
from .exceptions import DegenerateElement, NotUnimodular

logger = logging.getLogger(__name__)


class Realization(str, Enum):
    REAL = 'real'
    SU11 = 'su11'
    CL11 = 'cl11'


@dataclass(frozen=True)
class GroupElement:
    realization: Realization
    a: object
    b: object
    c: object
    d: object

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def real(cls, a, b, c, d):
        return cls(Realization.REAL, float(a), float(b), float(c), float(d))

    @classmethod
    def from_matrix(cls, matrix):
        matrix = np.asarray(matrix, dtype=float)
        return cls.real(matrix[0, 0], matrix[0, 1], matrix[1, 0], matrix[1, 1])

    @classmethod
    def su11(cls, alpha, beta):
        alpha, beta = complex(alpha), complex(beta)
        return cls(Realization.SU11, alpha, beta, beta.conjugate(), alpha.conjugate())

    @classmethod
    def cl11(cls, a, b, c, d):
        return cls(Realization.CL11, as_cliff(a), as_cliff(b), as_cliff(c), as_cliff(d))

    @classmethod
    def cayley_form(cls, na, nb):
        """[[na, nb], [-nb, na]] from an even number and a vector"""
        return cls.cl11(na, nb, -as_cliff(nb), na)

    @classmethod
    def identity(cls, realization=Realization.REAL):
        realization = Realization(realization)
        if realization == Realization.REAL:
            return cls.real(1.0, 0.0, 0.0, 1.0)
        if realization == Realization.SU11:
            return cls.su11(1.0, 0.0)
        return cls.cl11(1.0, 0.0, 0.0, 1.0)

    # ------------------------------------------------------------------
    # Group operations
    # ------------------------------------------------------------------

    def _require_same(self, other):
        if self.realization != other.realization:
            raise TypeError(f"Cannot multiply {self.realization.value} by {other.realization.value}")

    def __matmul__(self, other):
        self._require_same(other)
        if self.realization == Realization.CL11:
            return GroupElement(
                Realization.CL11,
                mul(self.a, other.a) + mul(self.b, other.c),
                mul(self.a, other.b) + mul(self.b, other.d),
                mul(self.c, other.a) + mul(self.d, other.c),
                mul(self.c, other.b) + mul(self.d, other.d),
            )
        return GroupElement(
            self.realization,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def determinant(self):
        """ad - bc for REAL/SU11, the pseudodeterminant a d* - b c* for CL11"""
        if self.realization == Realization.CL11:
            value = mul(self.a, self.d.reversion()) - mul(self.b, self.c.reversion())
            return float(value.c0)
        value = self.a * self.d - self.b * self.c
        return float(np.real(value))

    pseudodeterminant = determinant

    @property
    def sign(self):
        """Sign of the (pseudo)determinant; sections of tilde-D may carry -1"""
        return 1 if self.determinant() >= 0 else -1

    def inverse(self):
        delta = self.determinant()
        if abs(delta) == 0.0:
            raise DegenerateElement("Element has zero determinant", element=self)
        if self.realization == Realization.CL11:
            return GroupElement(
                Realization.CL11,
                self.d.reversion() / delta,
                -self.b.reversion() / delta,
                -self.c.reversion() / delta,
                self.a.reversion() / delta,
            )
        return GroupElement(self.realization, self.d / delta, -self.b / delta,
                            -self.c / delta, self.a / delta)

    def check_unimodular(self, atol=None, allow_sign=False):
        """
        Raise NotUnimodular unless the determinant is 1

        Args:
            atol: Absolute tolerance (UNIMODULAR_ATOL by default)
            allow_sign: Accept -1 as well (sections through the light cone)
        """
        atol = r11_setting('UNIMODULAR_ATOL') if atol is None else atol
        delta = self.determinant()
        target = abs(delta) if allow_sign else delta
        if abs(target - 1.0) > atol:
            raise NotUnimodular("Determinant differs from 1", determinant=delta,
                                realization=self.realization.value)
        return self

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------

    @property
    def na(self):
        """Even entry of a Cayley-form element"""
        return self.a.even

    @property
    def nb(self):
        """Vector entry of a Cayley-form element"""
        return self.b.vector

    @property
    def matrix(self):
        if self.realization == Realization.CL11:
            return np.array([[self.a.coefficients, self.b.coefficients],
                             [self.c.coefficients, self.d.coefficients]])
        dtype = complex if self.realization == Realization.SU11 else float
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=dtype)

    def is_close(self, other, atol=1e-10):
        self._require_same(other)
        return bool(np.allclose(self.matrix, other.matrix, rtol=0.0, atol=atol))


# ----------------------------------------------------------------------
# Realization maps
# ----------------------------------------------------------------------

def _require_real(g):
    if g.realization != Realization.REAL:
        raise TypeError(f"Expected a real matrix, got {g.realization.value}")
    return g.check_unimodular()


def to_su11(g):
    """
    SL(2,R) -> SU(1,1) by conjugation with [[1, -i], [-i, 1]]/sqrt(2)

    alpha = (a + d + i(b - c))/2, beta = (b + c + i(a - d))/2

    Raises:
        NotUnimodular: det(g) != 1
    """
    if g.realization == Realization.SU11:
        return g
    _require_real(g)
    alpha = 0.5 * complex(g.a + g.d, g.b - g.c)
    beta = 0.5 * complex(g.b + g.c, g.a - g.d)
    return GroupElement.su11(alpha, beta)


def cayley(g):
    """
    SL(2,R) -> Cl(1,1) realization

    na = a p2 + d p1 = (a(1 - e1e2) + d(1 + e1e2))/2
    nb = (b(e1 - e2) + c(e1 + e2))/2

    Raises:
        NotUnimodular: det(g) != 1
    """
    if g.realization == Realization.CL11:
        return g
    _require_real(g)
    na = EvenNumber(g.d, g.a)
    nb = Vector11(0.5 * (g.b + g.c), 0.5 * (g.c - g.b))
    return GroupElement.cayley_form(na, nb)


def as_cl11(g):
    return cayley(g) if g.realization == Realization.REAL else g


# ----------------------------------------------------------------------
# Special matrices of the Moebius group
# ----------------------------------------------------------------------

def shift(y):
    """x -> x + y"""
    return GroupElement.cl11(1.0, y, 0.0, 1.0)


def rotation(a):
    """x -> a x rev(a) for an invertible Clifford group element a"""
    a = as_cliff(a)
    return GroupElement.cl11(a, 0.0, 0.0, a.reversion().inverse())


def dilation(scale):
    """x -> scale * x"""
    if scale <= 0:
        raise ValueError("Dilation factor must be positive")
    root = np.sqrt(scale)
    return GroupElement.cl11(root, 0.0, 0.0, 1.0 / root)


def kelvin():
    """x -> -x^{-1}"""
    return GroupElement.cl11(0.0, -1.0, 1.0, 0.0)


def diagonal_even(value):
    """Cl(1,1) element diag(E, E) of the subgroup fixing the origin"""
    return GroupElement.cl11(value, 0.0, 0.0, value)


def random_unimodular(rng, count=1, scale=1.0):
    """
    Random elements of SL(2,R)

    Built as products of one-parameter pieces so the entries stay of
    moderate size for any seed.
    """
    elements = []
    for _ in range(count):
        t1, t2, theta = rng.uniform(-scale, scale, size=3)
        boost = GroupElement.real(np.exp(t1), 0.0, 0.0, np.exp(-t1))
        shear = GroupElement.real(np.cosh(t2), np.sinh(t2), np.sinh(t2), np.cosh(t2))
        turn = GroupElement.real(np.cos(theta), np.sin(theta), -np.sin(theta), np.cos(theta))
        elements.append(turn @ boost @ shear)
    return elements if count != 1 else elements[0]
