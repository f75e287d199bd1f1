# operators/generators.py - Right-action generators on the half planes
"""
Infinitesimal generators of the right action rho(g) z = s^{-1}(s(z) g).

Flows use the one-parameter groups of -2A and 2B on H and of -2A and Z
on tilde-H, so that rho(e^{At}) z = x + i y e^{2t} and

    H:       rho(A) = 2y d2,  rho(B) = 2y d1
    tilde-H: rho(A) = 2y d2,  rho(Z) = 2y d1
"""

import logging

import numpy as np

from core.numerics import central_difference, observed_order
from moebius.actions import right_action
from representations.lie import A, B, Z, LieElement, one_param
from .fields import FieldSample

logger = logging.getLogger(__name__)

FLOW_GENERATORS = {
    'halfplane': {'A': -2.0 * A, 'B': 2.0 * B},
    'tilde_halfplane': {'A': -2.0 * A, 'Z': 1.0 * Z},
}

# Coordinate differentiated by each closed form
CLOSED_FORM_AXIS = {'A': 1, 'B': 0, 'Z': 0}

_NAMES = {A: 'A', B: 'B', Z: 'Z'}


def _generator_name(X):
    if isinstance(X, LieElement):
        if X not in _NAMES:
            raise ValueError(f"Generators are A, B or Z, got {X}")
        return _NAMES[X]
    return str(X)


def flow_generator(domain, X):
    """
    Lie algebra element whose one-parameter group realizes rho(X)

    Raises:
        ValueError: X is not admitted on the domain
    """
    name = _generator_name(X)
    admitted = FLOW_GENERATORS.get(domain)
    if admitted is None:
        raise ValueError(f"Right-action generators live on the half planes, not on '{domain}'")
    if name not in admitted:
        raise ValueError(f"Generator {name} is not admitted on {domain}; use one of {sorted(admitted)}")
    return admitted[name]


def flow(domain, X, point, t):
    """rho(exp(t X)) applied to a half-plane point"""
    return right_action(domain, one_param(flow_generator(domain, X), t), point)


def rho_generator(domain, X, f, pt, method='closed'):
    """
    Generator rho(X) applied to f at pt

    Args:
        domain: 'halfplane' (A, B) or 'tilde_halfplane' (A, Z)
        X: 'A', 'B', 'Z' or the matching LieElement
        f: FieldSample on the same domain
        pt: interior point
        method: 'closed' (2y times a partial derivative) or 'flow'
            (d/dt f(rho(e^{Xt}) pt) at t = 0 by central differences)

    Returns:
        complex on H, Cliff11 on tilde-H

    Raises:
        OutOfDomain: y <= 0
    """
    if f.domain != domain:
        raise ValueError(f"Field lives on {f.domain}, generator requested on {domain}")
    name = _generator_name(X)
    flow_generator(domain, name)
    f.check_interior(pt)

    if method == 'closed':
        derivative = 2.0 * f.height(pt) * f.partial(pt, CLOSED_FORM_AXIS[name])
    elif method == 'flow':
        derivative = central_difference(lambda t: f.value(flow(domain, name, pt, t)), 0.0, f.step)
    else:
        raise ValueError(f"Unknown method '{method}'; expected 'closed' or 'flow'")
    return f.decode(derivative)


def generator_slope(domain, X, f, pt, exact, steps=(1e-2, 5e-3, 2.5e-3, 1.25e-3)):
    """
    Convergence order of the flow differences against an exact value

    Args:
        exact: rho(X) f at pt from analytic derivatives

    Returns:
        tuple: (errors per step, observed order)
    """
    reference = f.encode(exact)
    errors = []
    for h in steps:
        value = rho_generator(domain, X, f.with_evaluator(f.evaluator, step=h), pt, method='flow')
        errors.append(float(np.max(np.abs(f.encode(value) - reference))))
    order = observed_order(errors)
    logger.debug(f"rho({_generator_name(X)}) on {domain}: errors {errors}, order {order:.3f}")
    return errors, order


def bracket_defect(f, pt):
    """
    Commutator of the two admitted generators against rho of their bracket

    [rho(X), rho(Y)] f is computed by nested closed forms; the bracket side
    differentiates along the one-parameter group of [xi_X, xi_Y] for the
    flow generators xi. The section-based right action is not a group
    action, so the defect is reported rather than asserted.

    Returns:
        dict: commutator, bracket and defect magnitudes
    """
    domain = f.domain
    first, second = FLOW_GENERATORS[domain]

    def applied(name):
        return f.with_evaluator(lambda point: rho_generator(domain, name, f, point))

    commutator = (f.encode(rho_generator(domain, first, applied(second), pt))
                  - f.encode(rho_generator(domain, second, applied(first), pt)))
    generator = FLOW_GENERATORS[domain][first].bracket(FLOW_GENERATORS[domain][second])
    bracket = central_difference(
        lambda t: f.value(right_action(domain, one_param(generator, t), pt)), 0.0, f.step)
    defect = float(np.max(np.abs(commutator - bracket)))
    logger.info(f"Bracket defect on {domain} at {pt}: {defect:.3e}")
    return {
        'commutator': float(np.max(np.abs(commutator))),
        'bracket': float(np.max(np.abs(bracket))),
        'defect': defect,
    }
