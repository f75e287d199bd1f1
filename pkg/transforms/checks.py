# transforms/checks.py - Invariant suite for the transforms
import numpy as np

from clifford.algebra import E1, EvenNumber, Vector11, mul
from core.checks import logged, record
from moebius.geometry import BranchCoord, Sheet, TildePoint
from moebius.group import random_unimodular
from representations.boundary import BoundaryFunction, PolarGrid
from representations.lie import A, one_param
from representations.series import RepParam, coherent_state
from .cauchy import bergman, cauchy_disk
from .experiments import equivalence_scan, hardy_profile, norm_ratio_scan
from .hyperbolic import cauchy_tilde_pv, kernel_denominators, kernel_tilde, kernel_values, sio1_values
from .intertwining import intertwining_residual
from .quadrature import QuadratureSpec

# Group elements per domain in the intertwining checks
INTERTWINING_ELEMENTS = 20

# Interior points in the PV convergence checks
PV_POINTS = 50


def tilde_bump(n=801, t_max=8.0):
    """Smooth test function with different profiles on the four branches"""
    return BoundaryFunction.on_tilde(
        lambda branch, t: EvenNumber(np.exp(-0.5 * t ** 2), (1.0 + 0.2 * branch) * np.exp(-0.5 * (t - 0.3) ** 2)),
        n, t_max)


def interior_point(rng, bound=0.4):
    """Minus-sheet point with |u1|, |u2| <= bound, inside the disk"""
    return TildePoint(Sheet.MINUS, Vector11(*rng.uniform(-bound, bound, size=2)))


def random_disk_point(rng, low=0.3, high=0.9):
    return rng.uniform(low, high) * np.exp(2j * np.pi * rng.uniform())


def _multiply_back_error(u, coord):
    kernel = kernel_tilde(u, coord)
    z = EvenNumber(np.exp(coord.t), np.exp(-coord.t))
    denominator = mul(E1, u) * (-coord.sign) + z
    product = mul(denominator, kernel)
    return float(np.max(np.abs(product.coefficients - np.array([1.0, 0.0, 0.0, 0.0]))))


def run(rng, samples=20, elements=INTERTWINING_ELEMENTS, pv_points=PV_POINTS):
    """
    Reproduction, kernel identities, PV convergence and intertwining

    samples sizes the elliptic checks; elements and pv_points fix the
    intertwining group elements per domain and the PV interior points.
    """
    checks = []

    # elliptic side
    reproduction, annihilation = 0.0, 0.0
    for _ in range(samples):
        a = random_disk_point(rng)
        for k in range(9):
            f = BoundaryFunction.on_circle(lambda phi, k=k: np.exp(1j * k * phi), 2048)
            value = cauchy_disk(f, a).normalized
            reproduction = max(reproduction, abs(value - a ** k) / abs(a ** k))
            if k:
                g = BoundaryFunction.on_circle(lambda phi, k=k: np.exp(-1j * k * phi), 2048)
                annihilation = max(annihilation, abs(cauchy_disk(g, a).normalized))
    checks.append(record('cauchy_reproduction', reproduction, 1e-8))
    checks.append(record('cauchy_antiholomorphic', annihilation, 1e-8))

    grid = PolarGrid.from_settings()
    constant, reproducing = 0.0, 0.0
    for _ in range(max(1, samples // 4)):
        a = random_disk_point(rng, 0.0, 0.9)
        constant = max(constant, abs(bergman(2, lambda w: np.ones_like(w), a, grid=grid).normalized - 1.0))
        reproducing = max(reproducing, abs(bergman(3, lambda w: w ** 2, a, grid=grid).normalized - a ** 2))
    checks.append(record('bergman_m2_constant', constant, 1e-4))
    checks.append(record('bergman_m3_reproduction', reproducing, 1e-10))

    # hyperbolic kernel
    multiply_back, tested = 0.0, 0
    while tested < 100:
        u = Vector11(*rng.uniform(-2.0, 2.0, size=2))
        coord = BranchCoord(int(rng.integers(4)), float(rng.uniform(-3.0, 3.0)))
        b, _ = kernel_denominators(u, coord.sign, coord.t)
        if min(abs(b.a1), abs(b.a2)) < 0.1:
            continue
        multiply_back = max(multiply_back, _multiply_back_error(u, coord))
        tested += 1
    checks.append(record('kernel_multiply_back', multiply_back, 1e-12))

    sigma = rng.uniform(0.0, 1.0)
    u = Vector11(rng.uniform(0.1, 0.5), rng.uniform(-0.05, 0.05))
    state = coherent_state(RepParam.hyperbolic(sigma), TildePoint(Sheet.MINUS, -u), n=201, t_max=4.0)
    expected = sio1_values(u, 1, state.grid, sigma) * np.sqrt(abs(1.0 + u.square()))
    conjugate = EvenNumber(state.values.a2[0], state.values.a1[0])
    relation = max(np.max(np.abs(conjugate.a1 - expected.a1)), np.max(np.abs(conjugate.a2 - expected.a2)))
    checks.append(record('kernel_coherent_state_relation', relation, 1e-12, sigma=sigma))

    # principal values
    f = tilde_bump()
    q = QuadratureSpec.from_settings(t_max=8.0)
    non_monotone, worst_order, measured = 0, np.inf, 0
    for _ in range(pv_points):
        result = cauchy_tilde_pv(0.0, f, interior_point(rng), q)
        steps = np.asarray(result.diagnostics['steps'])
        if len(steps) < 2 or steps[0] < 1e-9:
            continue
        measured += 1
        if np.any(np.diff(steps) > 1e-13):
            non_monotone += 1
        worst_order = min(worst_order, result.diagnostics['observed_order'])
    checks.append(record('pv_monotone_steps', non_monotone, 0, points=pv_points, measured=measured))
    checks.append(record('pv_observed_order', max(0.0, 1.0 - worst_order) if measured else 0.0, 0.1,
                         points=pv_points, measured=measured))

    # intertwining
    disk_residual = 0.0
    coefficients = rng.normal(size=9) + 1j * rng.normal(size=9)
    trigonometric = BoundaryFunction.on_circle(
        lambda phi: np.exp(1j * np.multiply.outer(phi, np.arange(-4, 5))) @ coefficients, 1024)
    for _ in range(elements):
        g = random_unimodular(rng, scale=0.5)
        points = [random_disk_point(rng, 0.0, 0.7) for _ in range(3)]
        disk_residual = max(disk_residual, intertwining_residual(RepParam.mock(), g, trigonometric, points))
    checks.append(record('intertwining_disk', disk_residual, 1e-5, elements=elements))

    spacing = f.spacing
    ratio = 0.0
    for _ in range(elements):
        g = one_param(A, spacing * int(rng.integers(-20, 21)))
        residual, estimate = intertwining_residual(RepParam.hyperbolic(0.0), g, f, [interior_point(rng)], q,
                                                   with_estimate=True)
        ratio = max(ratio, residual / max(estimate, 1e-12))
    checks.append(record('intertwining_tilde_below_estimate', ratio, 1.0, elements=elements))

    # experiments, logged only
    def branch_kernel(point):
        return kernel_values(point.u, np.where(point.u.u1 >= 0, 1.0, -1.0), 0.0)

    profile = hardy_profile(branch_kernel, (-0.9, -0.7, -0.5, -0.3, -0.1), q)
    checks.append(logged('hardy_kernel_profile', profile['rows'], monotone=profile['monotone']))
    scan = norm_ratio_scan(0.0, f, (-0.9, -0.5), q, points_per_branch=5)
    checks.append(logged('norm_ratio_scan', scan))
    checks.append(logged('equivalence_scan', equivalence_scan((-1.0, -0.5, 0.5, 1.0))))
    return checks
