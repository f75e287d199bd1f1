# operators/checks.py - Invariant suite for generators, Dirac operators and Laplacians
import numpy as np

from clifford.algebra import Cliff11, Vector11
from core.checks import logged, record
from moebius.geometry import BranchCoord, Sheet, TildePoint
from representations.boundary import BoundaryFunction
from representations.lie import Z, one_param
from representations.series import apply_pi1
from transforms.cauchy import cauchy_disk
from transforms.hyperbolic import kernel_denominators, kernel_tilde
from transforms.quadrature import QuadratureSpec
from .dirac import annihilation_residual, dirac, laplacian
from .fields import FieldSample
from .generators import FLOW_GENERATORS, bracket_defect, generator_slope, rho_generator


# ----------------------------------------------------------------------
# Test fields with known derivatives
# ----------------------------------------------------------------------

def cubic_field(h=None):
    return FieldSample('halfplane', lambda z: z ** 3, h)


def cubic_generator(X, z):
    """rho(A) z^3 = 2y d_y z^3, rho(B) z^3 = 2y d_x z^3"""
    derivative = 3j * z ** 2 if X == 'A' else 3 * z ** 2
    return 2.0 * z.imag * derivative


def _tilde_coordinates(point):
    u = point.u if isinstance(point, TildePoint) else point
    return u.u2, u.u1


def tilde_polynomial(point):
    x, y = _tilde_coordinates(point)
    return Cliff11(x * x * y, np.sin(x), y ** 3, x * y)


def tilde_polynomial_generator(X, point):
    """rho(A) = 2y d_y, rho(Z) = 2y d_x of tilde_polynomial"""
    x, y = _tilde_coordinates(point)
    if X == 'A':
        return Cliff11(x * x, 0.0, 3 * y * y, x) * (2.0 * y)
    return Cliff11(2 * x * y, np.cos(x), 0.0, y) * (2.0 * y)


def kernel_field(domain, coord, h=None):
    """kernel_tilde(., coord) as a function of the point u"""
    return FieldSample(domain, lambda point: kernel_tilde(point, coord), h)


def _random_halfplane_point(rng):
    return complex(rng.uniform(-1.0, 1.0), rng.uniform(0.5, 2.0))


def _random_kernel_sample(rng, floor=0.7):
    """Point e1 y + e2 x and boundary coordinate with both kernel denominators at least `floor`"""
    while True:
        u = Vector11(rng.uniform(0.2, 1.0), rng.uniform(-1.0, 1.0))
        coord = BranchCoord(int(rng.integers(4)), float(rng.uniform(-1.0, 1.0)))
        b, _ = kernel_denominators(u, coord.sign, coord.t)
        if min(abs(b.a1), abs(b.a2)) >= floor:
            return u, coord


def run(rng, samples=20):
    """Closed forms against flows, orders, Dirac and Laplace identities, annihilation"""
    checks = []

    # generators
    tilde_field = FieldSample('tilde_halfplane', tilde_polynomial)
    fields = {'halfplane': cubic_field(), 'tilde_halfplane': tilde_field}
    points = {
        'halfplane': [_random_halfplane_point(rng) for _ in range(samples)],
        'tilde_halfplane': [Vector11(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0)) for _ in range(samples)],
    }
    exact = {'halfplane': cubic_generator, 'tilde_halfplane': tilde_polynomial_generator}
    for domain, generators in FLOW_GENERATORS.items():
        f = fields[domain]
        for X in generators:
            difference, worst_order = 0.0, 2.0
            for pt in points[domain]:
                closed = f.encode(rho_generator(domain, X, f, pt))
                flowed = f.encode(rho_generator(domain, X, f, pt, method='flow'))
                difference = max(difference, float(np.max(np.abs(closed - flowed))))
            for pt in points[domain][:3]:
                _, order = generator_slope(domain, X, f, pt, exact[domain](X, pt))
                worst_order = order if abs(order - 2.0) > abs(worst_order - 2.0) else worst_order
            checks.append(record(f'rho_{X}_{domain}_closed_vs_flow', difference, 1e-6))
            checks.append(record(f'rho_{X}_{domain}_order', abs(worst_order - 2.0), 0.2, order=worst_order))

    checks.append(logged('bracket_defect_halfplane', bracket_defect(cubic_field(), points['halfplane'][0])))
    checks.append(logged('bracket_defect_tilde_halfplane', bracket_defect(tilde_field, points['tilde_halfplane'][0])))

    # Dirac and Laplace on H
    holomorphic = max(abs(dirac('halfplane', FieldSample('halfplane', lambda z: z ** 2), pt))
                      for pt in points['halfplane'])
    conjugate = abs(dirac('halfplane', FieldSample('halfplane', np.conj), 1 + 2j) - 4.0)
    harmonic = max(abs(laplacian('halfplane', FieldSample('halfplane', lambda z: (z ** 3).real), pt))
                   for pt in points['halfplane'])
    modulus = max(abs(laplacian('halfplane', FieldSample('halfplane', lambda z: abs(z) ** 2), pt)
                      - 4.0 * pt.imag ** 2) for pt in points['halfplane'])
    checks.append(record('dirac_holomorphic', holomorphic, 1e-6))
    checks.append(record('dirac_conjugate', conjugate, 1e-8))
    checks.append(record('laplacian_harmonic', harmonic, 1e-5))
    checks.append(record('laplacian_modulus', modulus, 1e-5))

    # hyperbolic kernel
    right, left, wave = 0.0, 0.0, 0.0
    for _ in range(100):
        u, coord = _random_kernel_sample(rng)
        field = kernel_field('tilde_halfplane', coord)
        right = max(right, float(np.max(np.abs(dirac('tilde_halfplane', field, u, side='right').coefficients))))
        left = max(left, float(np.max(np.abs(dirac('tilde_halfplane', field, u, side='left').coefficients))))
        components = laplacian('tilde_disk', kernel_field('tilde_disk', coord), u).even
        wave = max(wave, abs(components.a1), abs(components.a2))
    checks.append(record('kernel_right_dirac', right, 1e-6))
    checks.append(logged('kernel_left_dirac_residue', left))
    checks.append(record('kernel_wave_components', wave, 1e-5))

    # transform images
    coefficients = rng.normal(size=8) + 1j * rng.normal(size=8)
    polynomial = np.polynomial.Polynomial(coefficients)
    boundary = BoundaryFunction.on_circle(lambda phi: polynomial(np.exp(1j * phi)), 1024)
    grid = [r * np.exp(2j * np.pi * k / 4) for r in (0.2, 0.5, 0.8) for k in range(4)]
    disk = annihilation_residual('disk', boundary, grid)
    checks.append(record('annihilation_disk', disk['max_residual'], 1e-5))

    images = FieldSample('disk', lambda a: cauchy_disk(boundary, a).normalized)
    harmonicity = max(abs(laplacian('disk', images, a)) for a in grid)
    checks.append(record('disk_image_harmonic', harmonicity, 1e-4))

    bump = BoundaryFunction.on_tilde(lambda branch, t: np.exp(-t ** 2) * (branch == 0), 801, 8.0)
    interior = [TildePoint(Sheet.MINUS, Vector11(0.5, u2)) for u2 in (-0.1, 0.0, 0.2)]
    tilde = annihilation_residual('tilde', bump, interior, QuadratureSpec.from_settings(t_max=8.0))
    checks.append(record('annihilation_tilde', tilde['max_residual'], max(tilde['error_estimate'], 1e-6),
                         error_estimate=tilde['error_estimate']))

    # Z acts on the vacuum of pi_1 with eigenvalue of modulus one, not zero
    vacuum = BoundaryFunction.on_circle(lambda phi: np.ones_like(phi), 64)
    tau = 1e-4
    derived = (apply_pi1(one_param(Z, tau), vacuum).values - apply_pi1(one_param(Z, -tau), vacuum).values) / (2 * tau)
    eigenvalue = complex(np.mean(derived))
    checks.append(logged('vacuum_z_eigenvalue', [eigenvalue.real, eigenvalue.imag]))
    return checks
