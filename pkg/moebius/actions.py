# moebius/actions.py - Sections, projections, Moebius actions, invariant measures
"""
Fraction-linear actions of SL(2,R) in four models:

- disk: z -> (alpha z + beta)/(conj(beta) z + conj(alpha))
- halfplane: z -> (a z + b)/(c z + d)
- tilde: u -> (a u + b)(c u + d)^{-1} on the double cover, Cl(1,1) entries
- tilde_halfplane: the real matrix embedded as [[a, b e2], [c e2, d]]

act(domain, g, x) is the left action by g's own entries, so
act(g, act(h, x)) == act(g @ h, x). act_by_inverse(domain, g, x) acts by
g^{-1}; representations pull functions back with it.

On the double cover the image moves to the other sheet exactly when
the scalar norm N(c u + d) is negative; N = 0 is a point sent to the
light cone at infinity.
"""

import logging
import math

import numpy as np

from clifford.algebra import E2, EvenNumber, Vector11, mul
from core.conf import r11_setting
from .exceptions import DegenerateElement, OutOfDomain, SingularDenominator
from .geometry import Sheet, TildePoint
from .group import GroupElement, Realization, as_cl11, to_su11

logger = logging.getLogger(__name__)

DOMAINS = ('disk', 'tilde', 'halfplane', 'tilde_halfplane')


def _require_domain(domain, allowed=DOMAINS):
    if domain not in allowed:
        raise ValueError(f"Unknown domain '{domain}'; expected one of {allowed}")


def embed_tilde_halfplane(g):
    """Real matrix as [[a, b e2], [c e2, d]] acting on e1 y + e2 x"""
    if g.realization == Realization.CL11:
        return g
    if g.realization != Realization.REAL:
        raise TypeError("tilde_halfplane accepts real or Cl(1,1) elements")
    return GroupElement.cl11(g.a, E2 * g.b, E2 * g.c, g.d)


# ----------------------------------------------------------------------
# Vectorized Clifford Moebius map
# ----------------------------------------------------------------------

def mobius_vector(g, u):
    """
    (a u + b)(c u + d)^{-1} for a Cl(1,1) element and vector(s) u

    Args:
        g: GroupElement in the CL11 realization
        u: Vector11, components may be arrays

    Returns:
        tuple: (image Vector11, scalar norm of c u + d)
    """
    denominator = mul(g.c, u) + g.d
    norm = denominator.scalar_norm()
    with np.errstate(divide='ignore', invalid='ignore'):
        inverse = denominator.conjugation() * (1.0 / norm)
    image = mul(mul(g.a, u) + g.b, inverse)
    return image.vector, norm


def _denominator_scale(g, u):
    denominator = mul(g.c, u) + g.d
    return float(np.sum(denominator.coefficients ** 2))


# ----------------------------------------------------------------------
# Actions
# ----------------------------------------------------------------------

def act(domain, g, point):
    """
    Left action of g on a point of the given model

    Args:
        domain: 'disk', 'halfplane', 'tilde' or 'tilde_halfplane'
        g: GroupElement (real elements are converted as needed)
        point: complex for disk/halfplane, TildePoint for tilde models

    Raises:
        OutOfDomain: point outside the closed model
        SingularDenominator: the denominator is not invertible
    """
    _require_domain(domain)

    if domain == 'disk':
        g = to_su11(g)
        z = complex(point)
        if abs(z) > 1.0 + 1e-12:
            raise OutOfDomain("Point outside the closed unit disk", point=z)
        denominator = g.c * z + g.d
        if abs(denominator) == 0.0:
            raise SingularDenominator("Denominator vanishes", point=z)
        return (g.a * z + g.b) / denominator

    if domain == 'halfplane':
        if g.realization != Realization.REAL:
            raise TypeError("halfplane action expects a real matrix")
        z = complex(point)
        if z.imag < 0:
            raise OutOfDomain("Point below the real axis", point=z)
        denominator = g.c * z + g.d
        if abs(denominator) == 0.0:
            raise SingularDenominator("Denominator vanishes", point=z)
        return (g.a * z + g.b) / denominator

    g = as_cl11(g) if domain == 'tilde' else embed_tilde_halfplane(g)
    if not isinstance(point, TildePoint):
        point = TildePoint(Sheet.PLUS, point)
    image, norm = mobius_vector(g, point.u)
    rtol = r11_setting('LIGHT_CONE_RTOL')
    if abs(norm) <= rtol * max(_denominator_scale(g, point.u), 1e-300):
        raise SingularDenominator("Point is sent to the light cone at infinity",
                                  u1=point.u.u1, u2=point.u.u2)
    sheet = point.sheet.flipped() if norm < 0 else point.sheet
    return TildePoint(sheet, Vector11(float(image.u1), float(image.u2)))


act_by = act


def act_by_inverse(domain, g, point):
    """Action of g^{-1}; the pullback used by every representation"""
    return act(domain, g.inverse(), point)


# ----------------------------------------------------------------------
# Sections and projections
# ----------------------------------------------------------------------

def halfplane_section(x, y):
    """[[sqrt(y), x/sqrt(y)], [0, 1/sqrt(y)]], sending i (or e1) to the point"""
    if y <= 0:
        raise OutOfDomain("Half-plane point needs y > 0", x=x, y=y)
    root = math.sqrt(y)
    return GroupElement.real(root, x / root, 0.0, 1.0 / root)


def _halfplane_coordinates(domain, point):
    if domain == 'halfplane':
        z = complex(point)
        return z.real, z.imag
    u = point.u if isinstance(point, TildePoint) else point
    return float(u.u2), float(u.u1)


def section(domain, point):
    """
    Representative s(point) of the homogeneous space

    disk: (1 - |a|^2)^{-1/2} [[1, a], [conj(a), 1]]
    tilde: |1 + u^2|^{-1/2} [[1, u], [-u, 1]], pseudodeterminant sign(1 + u^2)
    halfplane / tilde_halfplane: upper triangular section at x + iy / e1 y + e2 x

    Raises:
        OutOfDomain: |a| >= 1, 1 + u^2 = 0, or y <= 0
    """
    _require_domain(domain)

    if domain == 'disk':
        a = complex(point)
        gap = 1.0 - abs(a) ** 2
        if gap <= 0:
            raise OutOfDomain("Section needs |a| < 1", point=a)
        scale = 1.0 / math.sqrt(gap)
        return GroupElement(Realization.SU11, scale, scale * a, scale * a.conjugate(), scale + 0j)

    if domain == 'tilde':
        u = point.u if isinstance(point, TildePoint) else point
        gap = 1.0 + u.square()
        if gap == 0.0:
            raise OutOfDomain("Section undefined on the unit circle (1 + u^2 = 0)", u1=u.u1, u2=u.u2)
        scale = 1.0 / math.sqrt(abs(gap))
        element = GroupElement.cayley_form(EvenNumber.scalar(scale), u * scale)
        logger.debug(f"Tilde section at {u} has pseudodeterminant sign {element.sign}")
        return element

    x, y = _halfplane_coordinates(domain, point)
    return halfplane_section(x, y)


def section_inverse(domain, g):
    """
    The point s^{-1}(g) whose section starts the factorization of g

    For the tilde model the point is returned on the sheet that puts it
    inside the conformal disk.
    """
    _require_domain(domain)

    if domain == 'disk':
        g = to_su11(g)
        return g.b / g.d

    if domain == 'tilde':
        g = as_cl11(g)
        na = g.na
        if abs(na.scalar_norm()) == 0.0:
            raise DegenerateElement("Even entry is not invertible", a1=na.a1, a2=na.a2)
        u = mul(g.nb, na.inverse()).vector
        u = Vector11(float(u.u1), float(u.u2))
        sheet = Sheet.PLUS if 1.0 + u.square() < 0 else Sheet.MINUS
        return TildePoint(sheet, u)

    if domain == 'halfplane':
        return act('halfplane', g, 1j)
    return act('tilde_halfplane', g, TildePoint(Sheet.PLUS, Vector11(1.0, 0.0))).u


def project(domain, g):
    """
    Subgroup part r(g) with g = section(s^{-1}(g)) @ r(g)

    disk: diag(alpha/|alpha|, conj(alpha)/|alpha|)
    tilde: diag(E, E) with E = na / sqrt(|na conj(na)|)

    Raises:
        DegenerateElement: the relevant entry is not invertible
    """
    _require_domain(domain, ('disk', 'tilde'))

    if domain == 'disk':
        g = to_su11(g)
        modulus = abs(g.a)
        if modulus == 0.0:
            raise DegenerateElement("alpha vanishes", element=g)
        phase = g.a / modulus
        return GroupElement.su11(phase, 0.0)

    g = as_cl11(g)
    na = g.na
    norm = na.scalar_norm()
    if abs(norm) <= 1e-300:
        raise DegenerateElement("Even entry is a zero divisor", a1=na.a1, a2=na.a2)
    unit = na * (1.0 / math.sqrt(abs(norm)))
    return GroupElement.cl11(unit, 0.0, 0.0, unit)


def right_action(domain, g, point):
    """
    Right action s^{-1}(s(point) @ g) on the half-plane models

    Args:
        domain: 'halfplane' (complex points) or 'tilde_halfplane'
            (Vector11 e1 y + e2 x, or TildePoint)
        g: real GroupElement
        point: point of the model

    Returns:
        Point of the same kind as the input
    """
    _require_domain(domain, ('halfplane', 'tilde_halfplane'))
    x, y = _halfplane_coordinates(domain, point)
    moved = halfplane_section(x, y) @ g
    image = section_inverse(domain, moved)
    if domain == 'halfplane' or isinstance(point, Vector11):
        return image
    return TildePoint(point.sheet, image)


# ----------------------------------------------------------------------
# Invariant measures
# ----------------------------------------------------------------------

def invariant_density(domain, point):
    """
    Density of the invariant measure

    disk: (1 - |a|^2)^{-2}; tilde: (1 - u1^2 + u2^2)^{-2}

    Raises:
        OutOfDomain: on the degenerate locus
    """
    _require_domain(domain, ('disk', 'tilde'))
    if domain == 'disk':
        gap = 1.0 - abs(complex(point)) ** 2
    else:
        u = point.u if isinstance(point, TildePoint) else point
        gap = 1.0 + u.square()
    if gap == 0.0:
        raise OutOfDomain("Invariant measure degenerates on this locus", point=point)
    return gap ** -2


def jacobian_determinant(domain, g, point, h=1e-5):
    """|det| of the Jacobian of act(g, .) at point by central differences"""
    _require_domain(domain, ('disk', 'tilde'))
    if domain == 'disk':
        z = complex(point)
        dx = (act('disk', g, z + h) - act('disk', g, z - h)) / (2 * h)
        dy = (act('disk', g, z + 1j * h) - act('disk', g, z - 1j * h)) / (2 * h)
        return abs(dx.real * dy.imag - dx.imag * dy.real)

    def image(u1, u2):
        moved = act('tilde', g, TildePoint(point.sheet, Vector11(u1, u2)))
        return np.array([moved.u.u1, moved.u.u2])

    u1, u2 = point.u.u1, point.u.u2
    d1 = (image(u1 + h, u2) - image(u1 - h, u2)) / (2 * h)
    d2 = (image(u1, u2 + h) - image(u1, u2 - h)) / (2 * h)
    return abs(d1[0] * d2[1] - d1[1] * d2[0])
