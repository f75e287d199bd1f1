# moebius/checks.py - Invariant suite for realizations and actions
import logging

import numpy as np

from clifford.algebra import Vector11, kelvin_inverse, mul
from core.checks import record
from .actions import (
    act, invariant_density, jacobian_determinant, mobius_vector, project, section, section_inverse,
)
from .exceptions import SingularDenominator
from .geometry import Sheet, TildePoint
from .group import cayley, kelvin, random_unimodular, to_su11

logger = logging.getLogger(__name__)

# Group element and point pairs per domain in the measure invariance check
MEASURE_PAIRS = 200


def _entry_error(x, y):
    return float(np.max(np.abs(x.matrix - y.matrix)))


def _random_disk_point(rng, radius=0.9):
    r = radius * np.sqrt(rng.uniform())
    return r * np.exp(2j * np.pi * rng.uniform())


def _random_tilde_point(rng):
    while True:
        u = Vector11(*rng.uniform(-1.5, 1.5, size=2))
        if abs(1.0 + u.square()) > 0.2 and not u.on_light_cone(1e-2):
            return TildePoint(Sheet.PLUS if rng.uniform() < 0.5 else Sheet.MINUS, u)


def _well_conditioned(g, point, floor=0.05):
    """Keep away from points sent near the light cone at infinity"""
    return abs(float(mobius_vector(cayley(g), point.u)[1])) > floor


def run(rng, samples=1000, measure_pairs=MEASURE_PAIRS):
    """Homomorphisms, factorization, left action, measure invariance, Kelvin matrix"""
    pairs = [(random_unimodular(rng), random_unimodular(rng)) for _ in range(samples)]

    su11_error = max(_entry_error(to_su11(g @ h), to_su11(g) @ to_su11(h)) for g, h in pairs)
    cayley_error = max(_entry_error(cayley(g @ h), cayley(g) @ cayley(h)) for g, h in pairs)
    pseudodet_error = max(abs(cayley(g).determinant() - 1.0) for g, _ in pairs)
    checks = [
        record('to_su11_homomorphism', su11_error, 1e-10),
        record('cayley_homomorphism', cayley_error, 1e-10),
        record('cayley_pseudodeterminant', pseudodet_error, 1e-10),
    ]

    factor_errors = {'disk': 0.0, 'tilde': 0.0}
    for g, _ in pairs[:200]:
        for domain, image in (('disk', to_su11(g)), ('tilde', cayley(g))):
            rebuilt = section(domain, section_inverse(domain, image)) @ project(domain, image)
            factor_errors[domain] = max(factor_errors[domain], _entry_error(rebuilt, image))
    checks.extend(record(f'factorization_{d}', e, 1e-10) for d, e in factor_errors.items())

    disk_action, tilde_action = 0.0, 0.0
    for g, h in pairs[:200]:
        z = _random_disk_point(rng)
        disk_action = max(disk_action, abs(act('disk', g, act('disk', h, z)) - act('disk', g @ h, z)))
        p = _random_tilde_point(rng)
        if not _well_conditioned(h, p) or not _well_conditioned(g @ h, p):
            continue
        try:
            two_step = act('tilde', g, act('tilde', h, p))
            composite = act('tilde', g @ h, p)
        except SingularDenominator:
            continue
        scale = 1.0 + float(np.max(np.abs(composite.u.components)))
        sheet_error = 0.0 if two_step.sheet == composite.sheet else np.inf
        tilde_action = max(tilde_action, sheet_error,
                           float(np.max(np.abs(two_step.u.components - composite.u.components))) / scale)
    checks.append(record('left_action_disk', disk_action, 1e-10))
    checks.append(record('left_action_tilde', tilde_action, 1e-10))

    measure = {'disk': 0.0, 'tilde': 0.0}
    evaluated = {'disk': 0, 'tilde': 0}
    attempts = 0
    while evaluated['tilde'] < measure_pairs and attempts < 50 * measure_pairs:
        attempts += 1
        g = random_unimodular(rng, scale=0.3)
        if evaluated['disk'] < measure_pairs:
            z = _random_disk_point(rng, radius=0.7)
            moved = act('disk', g, z)
            lhs = invariant_density('disk', moved) * jacobian_determinant('disk', g, z)
            measure['disk'] = max(measure['disk'], abs(lhs / invariant_density('disk', z) - 1.0))
            evaluated['disk'] += 1

        p = _random_tilde_point(rng)
        if not _well_conditioned(g, p, floor=0.2):
            continue
        try:
            moved = act('tilde', g, p)
            lhs = invariant_density('tilde', moved) * jacobian_determinant('tilde', g, p)
        except SingularDenominator:
            continue
        measure['tilde'] = max(measure['tilde'], abs(lhs / invariant_density('tilde', p) - 1.0))
        evaluated['tilde'] += 1
    if evaluated['tilde'] < measure_pairs:
        logger.warning(f"Measure invariance: only {evaluated['tilde']} tilde pairs after {attempts} attempts")
    checks.extend(record(f'measure_invariance_{d}', e, 1e-8, pairs=evaluated[d]) for d, e in measure.items())

    kelvin_error = 0.0
    for _ in range(200):
        u = _random_tilde_point(rng).u
        expected = -kelvin_inverse(u)
        image = act('tilde', kelvin(), TildePoint(Sheet.PLUS, u)).u
        kelvin_error = max(kelvin_error, float(np.max(np.abs(image.components - expected.components))))
        kelvin_error = max(kelvin_error, float(np.max(np.abs(mul(u, kelvin_inverse(u)).coefficients
                                                         - np.array([1.0, 0.0, 0.0, 0.0])))))
    checks.append(record('kelvin_matrix_action', kelvin_error, 1e-10))
    return checks
