# clifford/algebra.py - Arithmetic in Cl(1,1)
"""
Cl(1,1) with e1^2 = -1, e2^2 = +1 and e1 e2 = -e2 e1.

Three value types:
- Cliff11: general element c0 + c1 e1 + c2 e2 + c12 e1e2
- EvenNumber: even subalgebra stored in the idempotent basis p1, p2
- Vector11: grade-one elements u1 e1 + u2 e2

Coefficients may be floats or numpy arrays of a common shape; every
operation is elementwise, so one object can carry a whole grid of
values through a computation.
"""

import logging
import numbers
from dataclasses import dataclass
from enum import Enum

import numpy as np

from core.conf import r11_setting
from .exceptions import DomainError, LightConeError

logger = logging.getLogger(__name__)


class Involution(str, Enum):
    REVERSION = 'reversion'
    CONJUGATION = 'conjugation'
    GRADE = 'grade'


# Sign applied to the grade 0, 1, 2 parts
INVOLUTION_SIGNS = {
    Involution.REVERSION: (1, 1, -1),
    Involution.CONJUGATION: (1, -1, -1),
    Involution.GRADE: (1, -1, 1),
}


def _is_scalar(value):
    return isinstance(value, (numbers.Number, np.ndarray)) and not isinstance(value, bool)


@dataclass(frozen=True)
class Cliff11:
    """General element of Cl(1,1)"""

    __array_ufunc__ = None

    c0: float = 0.0
    c1: float = 0.0
    c2: float = 0.0
    c12: float = 0.0

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def scalar(cls, value):
        return cls(c0=value)

    @classmethod
    def basis(cls, name):
        """Basis blade by name: '1', 'e1', 'e2' or 'e12'"""
        blades = {
            '1': cls(c0=1.0),
            'e1': cls(c1=1.0),
            'e2': cls(c2=1.0),
            'e12': cls(c12=1.0),
        }
        return blades[name]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other):
        other = as_cliff(other)
        return Cliff11(self.c0 + other.c0, self.c1 + other.c1,
                       self.c2 + other.c2, self.c12 + other.c12)

    __radd__ = __add__

    def __neg__(self):
        return Cliff11(-self.c0, -self.c1, -self.c2, -self.c12)

    def __sub__(self, other):
        return self + (-as_cliff(other))

    def __rsub__(self, other):
        return as_cliff(other) + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            return Cliff11(self.c0 * other, self.c1 * other,
                           self.c2 * other, self.c12 * other)
        return mul(self, as_cliff(other))

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return mul(as_cliff(other), self)

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1.0 / other)
        return self * as_cliff(other).inverse()

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    def grade_part(self, grade):
        if grade == 0:
            return Cliff11(c0=self.c0)
        if grade == 1:
            return Cliff11(c1=self.c1, c2=self.c2)
        if grade == 2:
            return Cliff11(c12=self.c12)
        raise ValueError(f"Cl(1,1) has no grade {grade}")

    def involution(self, kind):
        s0, s1, s2 = INVOLUTION_SIGNS[Involution(kind)]
        return Cliff11(s0 * self.c0, s1 * self.c1, s1 * self.c2, s2 * self.c12)

    def reversion(self):
        return self.involution(Involution.REVERSION)

    def conjugation(self):
        return self.involution(Involution.CONJUGATION)

    def grade_involution(self):
        return self.involution(Involution.GRADE)

    def scalar_norm(self):
        """x * conjugation(x), which is always a scalar in Cl(1,1)"""
        return self.c0 ** 2 + self.c1 ** 2 - self.c2 ** 2 - self.c12 ** 2

    def inverse(self):
        norm = self.scalar_norm()
        if np.any(norm == 0):
            raise DomainError("Element is a zero divisor", element=self)
        return self.conjugation() * (1.0 / norm)

    @property
    def even(self):
        """Projection to the even subalgebra"""
        return EvenNumber.from_cliff(self.c0, self.c12)

    @property
    def vector(self):
        """Projection to grade one"""
        return Vector11(self.c1, self.c2)

    @property
    def coefficients(self):
        return np.array([self.c0, self.c1, self.c2, self.c12])

    def is_close(self, other, atol=1e-12):
        return bool(np.allclose(self.coefficients, as_cliff(other).coefficients, rtol=0.0, atol=atol))

    def __repr__(self):
        return f"Cliff11({self.c0!r} + {self.c1!r}e1 + {self.c2!r}e2 + {self.c12!r}e12)"


@dataclass(frozen=True)
class EvenNumber:
    """
    Even element a1 p1 + a2 p2 with p1 = (1 + e1e2)/2, p2 = (1 - e1e2)/2

    Products are componentwise, so the type behaves like a pair of reals
    (the split-complex numbers).
    """

    __array_ufunc__ = None

    a1: float = 0.0
    a2: float = 0.0

    @classmethod
    def from_cliff(cls, c0, c12):
        return cls(c0 + c12, c0 - c12)

    @classmethod
    def scalar(cls, value):
        return cls(value, value)

    @property
    def c0(self):
        return 0.5 * (self.a1 + self.a2)

    @property
    def c12(self):
        return 0.5 * (self.a1 - self.a2)

    def to_cliff(self):
        return Cliff11(c0=self.c0, c12=self.c12)

    def __add__(self, other):
        if isinstance(other, EvenNumber):
            return EvenNumber(self.a1 + other.a1, self.a2 + other.a2)
        if _is_scalar(other):
            return EvenNumber(self.a1 + other, self.a2 + other)
        return self.to_cliff() + other

    __radd__ = __add__

    def __neg__(self):
        return EvenNumber(-self.a1, -self.a2)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, EvenNumber):
            return EvenNumber(self.a1 * other.a1, self.a2 * other.a2)
        if _is_scalar(other):
            return EvenNumber(self.a1 * other, self.a2 * other)
        return mul(self.to_cliff(), as_cliff(other))

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return mul(as_cliff(other), self.to_cliff())

    def __truediv__(self, other):
        if isinstance(other, EvenNumber):
            return self * other.inverse()
        return self * (1.0 / other)

    def conjugate(self):
        """Clifford conjugation; swaps the idempotent components"""
        return EvenNumber(self.a2, self.a1)

    def scalar_norm(self):
        """x * conjugate(x) = a1 a2"""
        return self.a1 * self.a2

    def norm_sq(self):
        """Euclidean modulus c0^2 + c12^2 used for L2 and Hardy norms"""
        return 0.5 * (self.a1 ** 2 + self.a2 ** 2)

    def inverse(self):
        if np.any(self.a1 == 0) or np.any(self.a2 == 0):
            raise DomainError("Even number with a zero component is not invertible", value=self)
        return EvenNumber(1.0 / self.a1, 1.0 / self.a2)

    def power(self, exponent, strict=True):
        """
        Real power through the functional calculus

        With strict=False components outside the domain of the power come
        back as NaN instead of raising DomainError.
        """
        exponent = float(exponent)
        if strict:
            return even_calculus(lambda x: np.power(x, exponent), self)
        with np.errstate(all='ignore'):
            return EvenNumber(np.power(self.a1, exponent), np.power(self.a2, exponent))

    def apply(self, func):
        return even_calculus(func, self)

    @property
    def components(self):
        return np.array([self.a1, self.a2])

    def is_close(self, other, atol=1e-12):
        other = other if isinstance(other, EvenNumber) else as_cliff(other).even
        return bool(np.allclose(self.components, other.components, rtol=0.0, atol=atol))


@dataclass(frozen=True)
class Vector11:
    """Vector u1 e1 + u2 e2"""

    __array_ufunc__ = None

    u1: float = 0.0
    u2: float = 0.0

    def to_cliff(self):
        return Cliff11(c1=self.u1, c2=self.u2)

    def square(self):
        """u^2 = -u1^2 + u2^2"""
        return -self.u1 ** 2 + self.u2 ** 2

    def on_light_cone(self, rtol=None):
        rtol = r11_setting('LIGHT_CONE_RTOL') if rtol is None else rtol
        scale = self.u1 ** 2 + self.u2 ** 2
        return bool(np.any(np.abs(self.square()) <= rtol * scale))

    def __add__(self, other):
        if isinstance(other, Vector11):
            return Vector11(self.u1 + other.u1, self.u2 + other.u2)
        return self.to_cliff() + other

    def __neg__(self):
        return Vector11(-self.u1, -self.u2)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if _is_scalar(other):
            return Vector11(self.u1 * other, self.u2 * other)
        return mul(self.to_cliff(), as_cliff(other))

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return mul(as_cliff(other), self.to_cliff())

    def __truediv__(self, other):
        return self * (1.0 / other)

    @property
    def components(self):
        return np.array([self.u1, self.u2])

    def is_close(self, other, atol=1e-12):
        return bool(np.allclose(self.components, other.components, rtol=0.0, atol=atol))


P1 = EvenNumber(1.0, 0.0)
P2 = EvenNumber(0.0, 1.0)
ONE = EvenNumber(1.0, 1.0)
E1 = Cliff11.basis('e1')
E2 = Cliff11.basis('e2')
E12 = Cliff11.basis('e12')


def as_cliff(value):
    """Promote scalars, even numbers and vectors to Cliff11"""
    if isinstance(value, Cliff11):
        return value
    if isinstance(value, (EvenNumber, Vector11)):
        return value.to_cliff()
    if _is_scalar(value):
        return Cliff11(c0=value)
    raise TypeError(f"Cannot interpret {type(value).__name__} as a Cl(1,1) element")


def mul(x, y):
    """Geometric product under e1^2 = -1, e2^2 = 1, e1e2 = -e2e1"""
    x, y = as_cliff(x), as_cliff(y)
    return Cliff11(
        c0=x.c0 * y.c0 - x.c1 * y.c1 + x.c2 * y.c2 + x.c12 * y.c12,
        c1=x.c0 * y.c1 + x.c1 * y.c0 - x.c2 * y.c12 + x.c12 * y.c2,
        c2=x.c0 * y.c2 + x.c2 * y.c0 - x.c1 * y.c12 + x.c12 * y.c1,
        c12=x.c0 * y.c12 + x.c12 * y.c0 + x.c1 * y.c2 - x.c2 * y.c1,
    )


def involution(kind, x):
    """Apply reversion, conjugation or the grade automorphism"""
    return as_cliff(x).involution(kind)


def grade_part(x, grade):
    return as_cliff(x).grade_part(grade)


def kelvin_inverse(x, rtol=None):
    """
    Kelvin inverse of a vector

    Args:
        x: Vector11 off the light cone
        rtol: Relative light-cone tolerance (LIGHT_CONE_RTOL by default)

    Returns:
        Vector11: conj(x) / (x conj(x)) = x / x^2
    """
    if x.on_light_cone(rtol):
        raise LightConeError("Vector lies on the light cone", u1=x.u1, u2=x.u2)
    return x * (1.0 / x.square())


def even_calculus(func, a):
    """
    Functional calculus f(a1) p1 + f(a2) p2

    Args:
        func: Real function, applied to each idempotent component
        a: EvenNumber

    Returns:
        EvenNumber

    Raises:
        DomainError: func fails or returns a non-finite value
    """
    values = []
    for component in (a.a1, a.a2):
        try:
            with np.errstate(all='ignore'):
                value = func(component)
        except (ValueError, ZeroDivisionError, OverflowError) as e:
            raise DomainError(f"Function undefined at component: {str(e)}", component=component) from e
        if not np.all(np.isfinite(value)):
            raise DomainError("Function undefined at component", component=component)
        values.append(value)
    return EvenNumber(values[0], values[1])


def exp_bivector(tau):
    """cosh(tau) + e1e2 sinh(tau) = e^tau p1 + e^-tau p2"""
    return EvenNumber(np.exp(tau), np.exp(-tau))
