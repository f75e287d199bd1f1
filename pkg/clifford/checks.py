# clifford/checks.py - Invariant suite for the Cl(1,1) algebra
import numpy as np

from core.checks import record
from .algebra import (
    P1, P2, ONE, Cliff11, EvenNumber, Vector11, even_calculus, exp_bivector,
    kelvin_inverse, mul,
)


def _random_elements(rng, count, low=-5, high=6):
    return Cliff11(*(rng.integers(low, high, size=count).astype(float) for _ in range(4)))


def _max_diff(x, y):
    return float(np.max(np.abs(x.coefficients - y.coefficients)))


def run(rng, samples=1000):
    """Exact algebra, idempotents, functional calculus and Kelvin round trip"""
    x = _random_elements(rng, samples)
    y = _random_elements(rng, samples)
    z = _random_elements(rng, samples)

    checks = [
        record('associativity', _max_diff(mul(mul(x, y), z), mul(x, mul(y, z))), 0.0),
        record('reversion_anti_homomorphism',
               _max_diff(mul(x, y).reversion(), mul(y.reversion(), x.reversion())), 0.0),
        record('conjugation_anti_homomorphism',
               _max_diff(mul(x, y).conjugation(), mul(y.conjugation(), x.conjugation())), 0.0),
        record('grade_automorphism',
               _max_diff(mul(x, y).grade_involution(), mul(x.grade_involution(), y.grade_involution())), 0.0),
        record('even_closure', float(np.max(np.abs(mul(x.even, y.even).coefficients[1:3]))), 0.0),
    ]

    relations = [
        mul(Cliff11.basis('e1'), Cliff11.basis('e1')) - (-1.0),
        mul(Cliff11.basis('e2'), Cliff11.basis('e2')) - 1.0,
        mul(Cliff11.basis('e1'), Cliff11.basis('e2')) + mul(Cliff11.basis('e2'), Cliff11.basis('e1')),
    ]
    checks.append(record('generator_relations', max(np.max(np.abs(r.coefficients)) for r in relations), 0.0))

    idempotents = [
        (P1 * P2).to_cliff(), (P2 * P1).to_cliff(),
        (P1 * P1 - P1).to_cliff(), (P2 * P2 - P2).to_cliff(),
        (P1 + P2 - ONE).to_cliff(),
    ]
    checks.append(record('idempotent_identities', max(np.max(np.abs(e.coefficients)) for e in idempotents), 0.0))

    # degree <= 8 polynomials with dyadic coefficients
    a = EvenNumber(rng.integers(-3, 4, size=samples) / 2.0, rng.integers(-3, 4, size=samples) / 2.0)
    coefficients = rng.integers(-4, 5, size=9) / 4.0
    direct = EvenNumber(np.zeros(samples), np.zeros(samples))
    power = EvenNumber(np.ones(samples), np.ones(samples))
    for c in coefficients:
        direct = direct + power * c
        power = mul(power, a).even
    calculus = even_calculus(lambda v: np.polynomial.polynomial.polyval(v, coefficients), a)
    scale = 1.0 + np.max(np.abs(direct.components))
    checks.append(record('polynomial_calculus', np.max(np.abs(calculus.components - direct.components)) / scale, 1e-12))

    u = Vector11(rng.uniform(-3, 3, size=samples), rng.uniform(-3, 3, size=samples))
    keep = np.abs(u.square()) > 1e-6
    u = Vector11(u.u1[keep], u.u2[keep])
    product = mul(u, kelvin_inverse(u))
    residual = np.abs(product.coefficients - np.array([1.0, 0.0, 0.0, 0.0])[:, None]).max(axis=0)
    relative = residual * np.abs(u.square()) / (u.u1 ** 2 + u.u2 ** 2)
    checks.append(record('kelvin_round_trip', np.max(relative), 1e-14))

    group_law = (exp_bivector(0.3) * exp_bivector(0.4)).components - exp_bivector(0.7).components
    checks.append(record('exp_bivector_group_law', np.max(np.abs(group_law)), 1e-15))
    return checks
