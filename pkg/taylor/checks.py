# taylor/checks.py - Invariant suite for the Taylor decompositions
import math

import numpy as np

from clifford.algebra import EvenNumber, Vector11
from core.checks import logged, record
from core.numerics import smooth_bump
from moebius.geometry import BRANCHES, BranchCoord, Sheet, TildePoint
from representations.boundary import BoundaryFunction
from transforms.cauchy import cauchy_disk
from transforms.hyperbolic import cauchy_tilde_pv, kernel_denominators, kernel_tilde
from transforms.quadrature import QuadratureSpec
from .classical import classical_coefficients, classical_expand, classical_taylor_value
from .hyperbolic import (e1u_components, geometric_expand, hyperbolic_expand, hyperbolic_taylor_value,
                         laplace_table_check, mellin_coefficient, mellin_coefficients)

LAPLACE_A = (0.0, 0.25, 0.5, 0.75, 1.0)
LAPLACE_K = (0.5, 1.0, 2.0)
LAPLACE_T = (0.5, 1.0, 1.5, 2.0, 3.0)


def forward_bump(n=801, t_max=8.0, scale=1.0):
    """
    Branch-0 data with p1 supported on t in (1, 3) and p2 on (-3, -1)

    Both components see exponents s > 1, where the Taylor decomposition
    of the kernel converges for small u.
    """
    def profile(branch, t):
        if branch != 0:
            return EvenNumber(np.zeros_like(t), np.zeros_like(t))
        return EvenNumber(scale * smooth_bump(t - 2.0), scale * smooth_bump(t + 2.0))
    return BoundaryFunction.on_tilde(profile, n, t_max)


def _admissible(u, t, margin=1e-3, floor=0.2):
    """Away from the convergence boundary and from the kernel singularities"""
    b, _ = kernel_denominators(u, 1, t)
    if min(abs(b.a1), abs(b.a2)) < floor:
        return False
    for a, s in zip(e1u_components(u), (t, -t)):
        if abs(abs(a) * math.exp(-s) - 1.0) < margin or abs(s) < margin:
            return False
    return True


def geometric_component(a, s, tail=1e-17):
    """
    1 / (e^s - a) summed as a plain geometric series

    Uses e^{-s} sum_j (a e^{-s})^j when |a| e^{-s} < 1 and the reflected
    -1/a sum_j (e^s / a)^j when |a| e^{-s} > 1, so the value never goes
    through the closed form of the kernel.
    """
    if abs(a) * math.exp(-s) < 1.0:
        first, ratio = math.exp(-s), a * math.exp(-s)
    else:
        first, ratio = -1.0 / a, math.exp(s) / a
    count = 1 if ratio == 0.0 else min(10 ** 6, int(math.ceil(math.log(tail) / math.log(abs(ratio)))) + 1)
    return first * math.fsum(np.power(ratio, np.arange(count)))


def run(rng, samples=20):
    """Laplace table, kernel decompositions, classical tails and the Taylor form of the transform"""
    checks = []

    # Laplace table
    laplace = 0.0
    for a in LAPLACE_A:
        for k in LAPLACE_K:
            for t in LAPLACE_T:
                lhs, rhs = laplace_table_check(a, k, t)
                laplace = max(laplace, abs(lhs - rhs))
    checks.append(record('laplace_table', laplace, 1e-10, points=len(LAPLACE_A) * len(LAPLACE_K) * len(LAPLACE_T)))

    # integer-part decomposition: classical components against the kernel,
    # continued components against the convergent geometric series
    classical, continued, pairs = 0.0, 0.0, 0
    counts = {'classical': 0, 'continued': 0}
    while pairs < 400:
        u = Vector11(*rng.uniform(-2.5, 2.5, size=2))
        t = float(rng.uniform(-2.0, 2.0))
        if not _admissible(u, t):
            continue
        value, flags = hyperbolic_expand(u, t, with_flags=True)
        expected = kernel_tilde(u, BranchCoord(0, t))
        for index, (a, s) in enumerate(zip(e1u_components(u), (t, -t))):
            got = (value.a1, value.a2)[index]
            if f"p{index + 1}: continued" in flags:
                reference = geometric_component(a, s)
                continued = max(continued, abs(got - reference) / max(1.0, abs(reference)))
                counts['continued'] += 1
            else:
                exact = (expected.a1, expected.a2)[index]
                classical = max(classical, abs(got - exact) / max(1.0, abs(exact)))
                counts['classical'] += 1
        pairs += 1
    checks.append(record('hyperbolic_expand_kernel', classical, 1e-8, pairs=pairs, components=counts['classical']))
    checks.append(record('hyperbolic_expand_continued', continued, 1e-8, components=counts['continued']))

    # geometric decomposition where both converge
    geometric, compared = 0.0, 0
    while compared < samples:
        u = Vector11(*rng.uniform(-0.2, 0.2, size=2))
        t = float(rng.uniform(-1.0, 1.0))
        rates = [abs(a) * math.exp(-s) for a, s in zip(e1u_components(u), (t, -t))]
        if max(rates) > 0.8 or not _admissible(u, t, floor=0.0):
            continue
        sums, _ = geometric_expand(u, t, 200)
        value = hyperbolic_expand(u, t)
        geometric = max(geometric, abs(sums.a1[-1] - value.a1), abs(sums.a2[-1] - value.a2))
        compared += 1
    checks.append(record('geometric_vs_hyperbolic', geometric, 1e-8))

    _, ratio = geometric_expand(Vector11(0.2, 0.0), 1.0, 30)
    checks.append(record('geometric_ratio', abs(ratio - 0.2 * math.e), 1e-12, ratio=ratio))

    # classical expansion
    partial = classical_expand(0.5, 0.0, 60)
    checks.append(record('classical_expand_limit', abs(partial[-1] - math.sqrt(3.0)), 1e-12))

    tail = 0.0
    for _ in range(samples):
        a = rng.uniform(0.1, 0.9) * np.exp(2j * np.pi * rng.uniform())
        phi = float(rng.uniform(0.0, 2.0 * np.pi))
        exact = math.sqrt(1.0 - abs(a) ** 2) / (1.0 - np.conj(a) * np.exp(1j * phi))
        sums = classical_expand(a, phi, 40)
        bound = math.sqrt(1.0 - abs(a) ** 2) * abs(a) ** np.arange(1, 41) / (1.0 - abs(a))
        tail = max(tail, float(np.max(np.abs(sums - exact) / (bound + 1e-14))))
    checks.append(record('classical_tail_bound', tail, 1.0))

    mode = BoundaryFunction.on_circle(lambda phi: np.exp(2j * phi), 256)
    coefficients = classical_coefficients(mode, 8).values
    expected = np.where(np.arange(1, 9) == 3, 2.0 * np.pi, 0.0)
    checks.append(record('classical_orthogonality', np.max(np.abs(coefficients - expected)), 1e-12))

    polynomial = np.polynomial.Polynomial(rng.normal(size=6) + 1j * rng.normal(size=6))
    data = BoundaryFunction.on_circle(lambda phi: polynomial(np.exp(1j * phi)), 1024)
    against_cauchy = 0.0
    for _ in range(samples):
        a = rng.uniform(0.0, 0.8) * np.exp(2j * np.pi * rng.uniform())
        against_cauchy = max(against_cauchy, abs(classical_taylor_value(data, a, 200) - cauchy_disk(data, a).value))
    checks.append(record('classical_taylor_vs_cauchy', against_cauchy, 1e-10))
    checks.append(logged('classical_decay_ratio', classical_coefficients(data, 6).decay_ratio()))

    # Mellin coefficients and the Taylor form of the hyperbolic transform
    bump = forward_bump()
    other = forward_bump(scale=-0.5)
    p = np.linspace(0.0, 6.0, 13)
    combined = bump.with_values(bump.values * 2.0 + other.values * 3.0)
    lhs = mellin_coefficient(combined, p)
    rhs = mellin_coefficient(bump, p) * 2.0 + mellin_coefficient(other, p) * 3.0
    linearity = float(np.max(np.abs(np.concatenate([lhs.a1 - rhs.a1, lhs.a2 - rhs.a2]))))
    checks.append(record('mellin_linearity', linearity, 1e-10))

    spectrum = mellin_coefficients(bump, np.linspace(0.0, 8.0, 33))
    first, _ = spectrum.components
    checks.append(logged('mellin_peak', float(spectrum.index[int(np.argmax(np.abs(first)))]),
                         decay_ratio=spectrum.decay_ratio()))

    quadrature = QuadratureSpec.from_settings(t_max=8.0, rule='trapezoid')
    cross = 0.0
    for _ in range(min(samples, 5)):
        # u1 > |u2| keeps branch 0 free of singular points
        u1 = float(rng.uniform(0.05, 0.3))
        point = TildePoint(Sheet.MINUS, Vector11(u1, float(rng.uniform(-0.8, 0.8)) * u1))
        taylor = hyperbolic_taylor_value(bump, point)
        transform = cauchy_tilde_pv(0.0, bump, point, quadrature).normalized
        cross = max(cross, abs(taylor.a1 - transform.a1), abs(taylor.a2 - transform.a2))
    checks.append(record('taylor_vs_transform', cross, 1e-10, branches=len(BRANCHES)))
    return checks
