# representations/checks.py - Invariant suite for the four series
import numpy as np

from clifford.algebra import EvenNumber, exp_bivector
from core.checks import logged, record
from moebius.group import GroupElement, diagonal_even, random_unimodular
from .boundary import BoundaryFunction, DiskFunction, PolarGrid
from .lie import A, B, Z, LieElement, one_param
from .series import (
    apply_pi1, apply_pim, apply_pisigma, apply_principal, clifford_inner,
)


def _trigonometric(rng, degree=4):
    coefficients = rng.normal(size=2 * degree + 1) + 1j * rng.normal(size=2 * degree + 1)
    frequencies = np.arange(-degree, degree + 1)
    return lambda phi: np.exp(1j * np.multiply.outer(phi, frequencies)) @ coefficients


def eigen_slope(sigma, powers=(0.25, 0.5, 0.75, 1.0), tau=1e-3, t_max=8.0, n=4001):
    """
    Finite-difference eigenvalues of the subgroup-A flow on f_p = e^{e1e2 p t}

    Returns:
        tuple: (eigenvalues per p, fitted slope, max deviation from e1e2 f_p)
    """
    flow = LieElement(x_a=-2.0)
    eigenvalues, deviation = [], 0.0
    for p in powers:
        f = BoundaryFunction.on_tilde(lambda branch, t: EvenNumber(np.exp(p * t), np.exp(-p * t)), n, t_max)
        forward = apply_pisigma(sigma, one_param(flow, tau), f).values
        backward = apply_pisigma(sigma, one_param(flow, -tau), f).values
        inner = np.abs(f.grid) < t_max / 2
        d1 = (forward.a1 - backward.a1)[:, inner] / (2 * tau)
        d2 = (forward.a2 - backward.a2)[:, inner] / (2 * tau)
        ratio1 = d1 / f.values.a1[:, inner]
        ratio2 = -d2 / f.values.a2[:, inner]
        eigenvalue = float(np.median(ratio1))
        deviation = max(deviation, float(np.max(np.abs(ratio1 - eigenvalue))),
                        float(np.max(np.abs(ratio2 - eigenvalue))))
        eigenvalues.append(eigenvalue)
    slope = float(np.polyfit(powers, eigenvalues, 1)[0])
    return eigenvalues, slope, deviation


def run(rng, samples=20):
    """Brackets, vacuum relations, unitarity and the representation property"""
    checks = []

    brackets = [
        Z.bracket(A).coefficients - (2 * B).coefficients,
        Z.bracket(B).coefficients - (-2 * A).coefficients,
        A.bracket(B).coefficients - (-0.5 * Z).coefficients,
    ]
    checks.append(record('bracket_table', np.max(np.abs(brackets)), 1e-14))
    rotation = one_param(Z, np.pi / 2).matrix - np.array([[0.0, 1.0], [-1.0, 0.0]])
    checks.append(record('one_param_rotation', np.max(np.abs(rotation)), 1e-12))

    # mock discrete series
    psi = rng.uniform(-np.pi, np.pi)
    vacuum = BoundaryFunction.on_circle(lambda phi: np.ones_like(phi), 256)
    rotated = apply_pi1(GroupElement.su11(np.exp(-1j * psi), 0.0), vacuum)
    checks.append(record('pi1_vacuum', np.max(np.abs(rotated.values - np.exp(1j * psi))), 1e-12))

    unitarity, composition = 0.0, 0.0
    for _ in range(samples):
        f = BoundaryFunction.on_circle(_trigonometric(rng), 1024)
        g, h = random_unimodular(rng, scale=0.5), random_unimodular(rng, scale=0.5)
        unitarity = max(unitarity, abs(apply_pi1(g, f).norm() / f.norm() - 1.0))
        two_step = apply_pi1(g, apply_pi1(h, f, interpolation='fourier'), interpolation='fourier')
        composition = max(composition, two_step.max_difference(apply_pi1(g @ h, f, interpolation='fourier')))
    checks.append(record('pi1_unitarity', unitarity, 1e-6))
    checks.append(record('pi1_representation', composition, 1e-6))

    # discrete series
    grid = PolarGrid(96, 128)
    for m in (2, 3):
        f = DiskFunction(lambda w: 1.0 + 0.5 * w - 0.25j * w ** 3, grid)
        worst = 0.0
        for _ in range(samples // 2):
            g = random_unimodular(rng, scale=0.5)
            worst = max(worst, abs(apply_pim(m, g, f).norm(m) / f.norm(m) - 1.0))
        checks.append(record(f'pim_unitarity_m{m}', worst, 1e-5))

    # hyperbolic series
    tau, sigma = rng.uniform(-0.5, 0.5), rng.uniform(0.0, 1.0)
    unit = exp_bivector(tau)
    constant = BoundaryFunction.on_tilde(lambda branch, t: np.ones_like(t), 801, 6.0)
    image = apply_pisigma(sigma, diagonal_even(unit).inverse(), constant)
    expected = unit.power(-1.0 - 2.0 * sigma)
    inside = np.abs(constant.grid) < 5.0
    vacuum_error = max(np.max(np.abs(image.values.a1[:, inside] - expected.a1)),
                       np.max(np.abs(image.values.a2[:, inside] - expected.a2)))
    checks.append(record('pisigma_vacuum', vacuum_error, 1e-12))

    eigenvalues, slope, deviation = eigen_slope(sigma)
    checks.append(record('pisigma_eigenfunction', deviation, 1e-4))
    checks.append(record('pisigma_eigen_slope_magnitude', abs(abs(slope) - 2.0), 1e-4))
    checks.append(logged('pisigma_eigenvalues', eigenvalues, sigma=sigma, slope=slope))

    bump = BoundaryFunction.on_tilde(lambda branch, t: EvenNumber(np.exp(-t ** 2), (1 + branch) * np.exp(-2 * t ** 2)),
                                     2001, 8.0)
    moved = apply_pisigma(sigma, one_param(A, 2.0 * tau), bump)
    before, after = clifford_inner(bump, bump), clifford_inner(moved, moved)
    checks.append(record('pisigma_scalar_norm', abs(after.c0 - before.c0) / abs(before.c0), 1e-6))
    checks.append(logged('pisigma_bivector_part', float(after.c12 - before.c12)))

    # principal series
    line_bump = BoundaryFunction.on_line(lambda x: np.exp(-4 * x ** 2) * (1 + 0.5j * x), 8001, 20.0)
    s = rng.uniform(-2.0, 2.0)
    t = rng.uniform(-1.0, 1.0)
    dilation = GroupElement.real(np.exp(t / 2), 0.0, 0.0, np.exp(-t / 2))
    shear = GroupElement.real(1.0, 0.0, -0.3, 1.0)
    principal = max(abs(apply_principal(s, g, line_bump).norm() / line_bump.norm() - 1.0)
                    for g in (dilation, shear))
    checks.append(record('principal_unitarity', principal, 1e-6))
    return checks
