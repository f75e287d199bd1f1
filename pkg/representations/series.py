# representations/series.py - Mock discrete, discrete, hyperbolic and principal series
"""
Concrete representations of SL(2,R), all written as pullbacks:
[pi(g) f](x) = cocycle(g^{-1}, x) * f(g^{-1} . x), the entries of g^{-1}
supplying the coefficients.

- pi_1 (mock discrete series) on the circle
- pi_m (discrete series, m >= 2) on the disk
- pi_sigma (hyperbolic cousin of the principal series) on tilde-T
- pi_is (principal series) on the real line

Grid points where a denominator is not invertible, or where a fractional
power of an even number is undefined, are set to 0 and listed in the
result's flags; strict=True raises instead.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from clifford.algebra import EvenNumber, mul
from clifford.exceptions import DomainError
from core.conf import r11_setting
from moebius.exceptions import OutOfDomain, SingularDenominator
from moebius.geometry import BRANCHES, circle_vector
from moebius.group import Realization, as_cl11, to_su11
from .boundary import BoundaryFunction, DiskFunction, Domain, PolarGrid

logger = logging.getLogger(__name__)


class Series(str, Enum):
    MOCK = 'mock'
    DISCRETE = 'discrete'
    HYPERBOLIC = 'hyperbolic'
    PRINCIPAL = 'principal'


@dataclass(frozen=True)
class RepParam:
    series: Series
    m: int = None
    sigma: float = 0.0
    s: float = 0.0

    def __post_init__(self):
        if self.series == Series.DISCRETE and (not isinstance(self.m, int) or self.m < 2):
            raise ValueError(f"Discrete series needs an integer m >= 2, got {self.m}")

    @classmethod
    def mock(cls):
        return cls(Series.MOCK)

    @classmethod
    def discrete(cls, m):
        return cls(Series.DISCRETE, m=m)

    @classmethod
    def hyperbolic(cls, sigma):
        return cls(Series.HYPERBOLIC, sigma=float(sigma))

    @classmethod
    def principal(cls, s):
        return cls(Series.PRINCIPAL, s=float(s))


def _require(f, domain):
    if f.domain != domain:
        raise ValueError(f"Expected a function on {domain.value}, got {f.domain.value}")


def _settle(values, bad, strict, reason):
    """Zero the bad samples and return their indices as flags"""
    if not np.any(bad):
        return ()
    if strict:
        raise SingularDenominator(reason, count=int(np.count_nonzero(bad)))
    logger.warning(f"{reason}: {np.count_nonzero(bad)} grid point(s) skipped")
    values[bad] = 0.0
    if bad.ndim == 1:
        return tuple(int(i) for i in np.flatnonzero(bad))
    return tuple((int(b), int(j)) for b, j in zip(*np.nonzero(bad)))


# ----------------------------------------------------------------------
# Mock discrete and discrete series
# ----------------------------------------------------------------------

def apply_pi1(g, f, interpolation=None, strict=False):
    """
    [pi_1(g) f](e^{i phi}) = (conj(beta) e^{i phi} + conj(alpha))^{-1}
                             f((alpha e^{i phi} + beta)/(conj(beta) e^{i phi} + conj(alpha)))

    with g^{-1} = [[alpha, beta], [conj(beta), conj(alpha)]]
    """
    _require(f, Domain.CIRCLE)
    ginv = to_su11(g).inverse()
    alpha, beta = ginv.a, ginv.b
    zeta = np.exp(1j * f.grid)
    denominator = np.conj(beta) * zeta + np.conj(alpha)
    bad = np.abs(denominator) <= 1e-300
    denominator = np.where(bad, 1.0, denominator)
    image = (alpha * zeta + beta) / denominator
    values = f.evaluate(np.angle(image), interpolation=interpolation) / denominator
    flags = _settle(values, bad, strict, "Denominator vanishes on the circle")
    return f.with_values(values, flags)


def apply_pim(m, g, f):
    """[pi_m(g) f](w) = f((alpha w + beta)/(conj(beta) w + conj(alpha))) (conj(beta) w + conj(alpha))^{-m}"""
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"Discrete series needs an integer m >= 2, got {m}")
    ginv = to_su11(g).inverse()
    alpha, beta = ginv.a, ginv.b

    def pulled_back(w):
        denominator = np.conj(beta) * w + np.conj(alpha)
        return f((alpha * w + beta) / denominator) * denominator ** (-m)

    return DiskFunction(pulled_back, f.grid)


# ----------------------------------------------------------------------
# Hyperbolic series
# ----------------------------------------------------------------------

def _branch_grid(t):
    branches, times = np.meshgrid(np.array(BRANCHES), t, indexing='ij')
    signs = np.where(branches % 2 == 0, 1.0, -1.0)
    return branches, times, circle_vector(signs, 1.0, times)


def _finite(x):
    return np.isfinite(x.a1) & np.isfinite(x.a2)


def pisigma_factor(sigma, g, v):
    """
    Cocycle and image point of pi_sigma at vectors v

    Args:
        sigma: Real parameter
        g: group element (real or Cl(1,1))
        v: Vector11 of points on tilde-T

    Returns:
        tuple: (factor EvenNumber, image Vector11, denominator norm)
    """
    ginv = as_cl11(g).inverse()
    na, nb = ginv.na, ginv.nb
    denominator = (-mul(nb, v) + na).even
    numerator_factor = (-mul(v, nb) + na.conjugate()).even
    norm = denominator.scalar_norm()
    with np.errstate(all='ignore'):
        inverse = EvenNumber(1.0 / denominator.a1, 1.0 / denominator.a2)
    image = mul(mul(na, v) + nb, inverse).vector
    factor = numerator_factor.power(sigma, strict=False) * denominator.power(-1.0 - sigma, strict=False)
    return factor, image, norm


def apply_pisigma(sigma, g, f, interpolation=None, strict=False):
    """
    [pi_sigma(g) f](v) = (-v nb + conj(na))^sigma (-nb v + na)^{-1-sigma}
                         f((na v + nb)(-nb v + na)^{-1})

    with g^{-1} = [[na, nb], [-nb, na]]. The image moves to the other
    sheet where the denominator has negative scalar norm.

    Raises:
        SingularDenominator, DomainError: only with strict=True
    """
    _require(f, Domain.TILDE)
    branches, _, v = _branch_grid(f.grid)
    factor, image, norm = pisigma_factor(sigma, g, v)

    rtol = r11_setting('LIGHT_CONE_RTOL')
    singular = ~np.isfinite(norm) | (np.abs(norm) <= rtol)
    undefined = ~_finite(factor) & ~singular
    if strict and np.any(undefined):
        raise DomainError("Fractional power of an even number with a negative component",
                          sigma=sigma, count=int(np.count_nonzero(undefined)))

    sheet_bit = (branches >= 2).astype(int) ^ (norm < 0).astype(int)
    with np.errstate(all='ignore'):
        sign_bit = (image.u1 < 0).astype(int)
        radius = np.sqrt(np.abs(image.square()))
        t_image = np.arcsinh(np.where(sign_bit == 1, 1.0, -1.0) * image.u2 / radius)
    bad = singular | undefined | ~np.isfinite(t_image)
    t_image = np.where(bad, 0.0, t_image)
    pulled = f.evaluate(2 * sheet_bit + sign_bit, t_image, interpolation=interpolation)

    a1 = np.where(bad, 0.0, factor.a1) * pulled.a1
    a2 = np.where(bad, 0.0, factor.a2) * pulled.a2
    flags = _settle(a1, bad, strict, "pi_sigma undefined on tilde-T")
    a2[bad] = 0.0
    return f.with_values(EvenNumber(a1, a2), flags)


def apply_pisigma_interior(sigma, g, func):
    """
    pi_sigma of a subgroup-A element on functions of the interior

    For g^{-1} = diag(E, E) the action is F(u) -> E^{-1-2 sigma} F(E u E^{-1}).

    Args:
        func: callable on Vector11 returning EvenNumber

    Returns:
        callable: the transformed function
    """
    ginv = as_cl11(g).inverse()
    if not (ginv.b.is_close(0.0) and ginv.c.is_close(0.0)):
        raise ValueError("Interior action is defined for diagonal elements only")
    unit = ginv.na
    factor = unit.power(-1.0 - 2.0 * sigma)
    inverse = unit.inverse()

    def transformed(u):
        return factor * func(mul(mul(unit, u), inverse).vector)

    return transformed


def clifford_inner(f1, f2):
    """
    Clifford valued inner product, the integral of conj(f2) f1 over tilde-T

    Returns:
        EvenNumber: scalar part c0 and bivector part c12 of the result
    """
    _require(f1, Domain.TILDE)
    product = f2.values.conjugate() * f1.values
    weights = f1.weights[None, :]
    return EvenNumber(float(np.sum(product.a1 * weights)), float(np.sum(product.a2 * weights)))


# ----------------------------------------------------------------------
# Principal series
# ----------------------------------------------------------------------

def apply_principal(s, g, f, interpolation=None, strict=False):
    """[pi_is(g) f](x) = |cx + d|^{-1-is} f((ax + b)/(cx + d)) with g^{-1} = [[a, b], [c, d]]"""
    _require(f, Domain.LINE)
    if g.realization != Realization.REAL:
        raise TypeError("Principal series acts through real matrices")
    ginv = g.check_unimodular().inverse()
    x = f.grid
    denominator = ginv.c * x + ginv.d
    bad = np.abs(denominator) <= 1e-12 * (abs(ginv.c) + abs(ginv.d))
    denominator = np.where(bad, 1.0, denominator)
    image = (ginv.a * x + ginv.b) / denominator
    values = np.abs(denominator) ** (-1.0 - 1j * s) * f.evaluate(image, interpolation=interpolation)
    flags = _settle(values, bad, strict, "Denominator vanishes on the line")
    return f.with_values(values, flags)


def apply_representation(param, g, f, **options):
    """Dispatch on RepParam"""
    if param.series == Series.MOCK:
        return apply_pi1(g, f, **options)
    if param.series == Series.DISCRETE:
        return apply_pim(param.m, g, f)
    if param.series == Series.HYPERBOLIC:
        return apply_pisigma(param.sigma, g, f, **options)
    return apply_principal(param.s, g, f, **options)


# ----------------------------------------------------------------------
# Coherent states
# ----------------------------------------------------------------------

def hyperbolic_coherent_values(sigma, u, v):
    """
    |1 + u^2|^{1/2} (v u + 1)^sigma (u v + 1)^{-1-sigma} at vectors v

    This is pi_sigma(s(u)) f_0 for f_0 = 1; for 1 + u^2 > 0 it coincides
    with apply_pisigma of the section.
    """
    gap = 1.0 + u.square()
    if gap == 0.0:
        raise OutOfDomain("Coherent state undefined on the unit circle", u1=u.u1, u2=u.u2)
    right = (mul(v, u) + 1.0).even
    left = (mul(u, v) + 1.0).even
    return (right.power(sigma, strict=False) * left.power(-1.0 - sigma, strict=False)) * np.sqrt(abs(gap))


def coherent_state(param, point, n=None, t_max=None, grid=None):
    """
    pi(s(point)) f_0 for the vacuum f_0 = 1

    mock: sqrt(1 - |a|^2)/(1 - conj(a) e^{i phi}) on the circle
    discrete: (1 - |a|^2)^{m/2} (1 - conj(a) w)^{-m} on the disk
    hyperbolic: the closed form above on tilde-T, non-finite samples flagged

    Raises:
        OutOfDomain: point outside the open disk
    """
    if param.series == Series.PRINCIPAL:
        raise ValueError("The line model has no normalizable vacuum vector")

    if param.series in (Series.MOCK, Series.DISCRETE):
        a = complex(point)
        gap = 1.0 - abs(a) ** 2
        if gap <= 0:
            raise OutOfDomain("Coherent state needs |a| < 1", point=a)
        if param.series == Series.MOCK:
            return BoundaryFunction.on_circle(lambda phi: np.sqrt(gap) / (1.0 - a.conjugate() * np.exp(1j * phi)), n)
        m = param.m
        return DiskFunction(lambda w: gap ** (m / 2.0) * (1.0 - a.conjugate() * w) ** (-m),
                            grid or PolarGrid.from_settings())

    u = point.u if hasattr(point, 'u') else point
    f = BoundaryFunction.on_tilde(lambda branch, t: EvenNumber.scalar(np.zeros_like(t)), n, t_max)
    _, _, v = _branch_grid(f.grid)
    values = hyperbolic_coherent_values(param.sigma, u, v)
    bad = ~_finite(values)
    a1 = np.where(bad, 0.0, values.a1)
    a2 = np.where(bad, 0.0, values.a2)
    if np.any(bad):
        logger.warning(f"Coherent state at {u}: {np.count_nonzero(bad)} undefined sample(s)")
    flags = tuple((int(b), int(j)) for b, j in zip(*np.nonzero(bad)))
    return f.with_values(EvenNumber(a1, a2), flags)