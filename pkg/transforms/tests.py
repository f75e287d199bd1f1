import inspect
import math

import numpy as np
from django.test import SimpleTestCase
from scipy.integrate import trapezoid

from clifford.algebra import EvenNumber, Vector11
from clifford.exceptions import DomainError
from core.numerics import make_rng
from moebius.exceptions import BadRadius, OutOfDomain
from moebius.geometry import BranchCoord, Sheet, TildePoint
from moebius.group import random_unimodular
from representations.boundary import BoundaryFunction, DiskFunction, PolarGrid
from representations.lie import A, one_param
from representations.series import RepParam, coherent_state
from . import checks
from .cauchy import bergman, cauchy_disk
from .exceptions import LightConeSingularity, PVDivergence
from .experiments import equivalence_scan, hardy_profile
from .hyperbolic import cauchy_tilde_pv, hardy_norm, kernel_tilde, kernel_values, sio1_integrand, sio1_values
from .intertwining import induced_disk_action, intertwining_residual
from .quadrature import QuadratureSpec, TransformResult, aligned_rule, extrapolate_pv


def on_circle(func, n=2048):
    return BoundaryFunction.on_circle(func, n)


def branch_kernel(point):
    return kernel_values(point.u, np.where(point.u.u1 >= 0, 1.0, -1.0), 0.0)


class QuadratureSpecTests(SimpleTestCase):

    def test_from_settings(self):
        q = QuadratureSpec.from_settings()
        self.assertEqual(q.n, 2048)
        self.assertEqual(len(q.pv_epsilons), 7)
        self.assertAlmostEqual(q.pv_epsilons[0], 0.1)
        self.assertAlmostEqual(q.pv_epsilons[-1], 0.1 / 64)

    def test_overrides(self):
        q = QuadratureSpec.from_settings(t_max=6.0, pv_levels=2, pv_epsilon0=0.2)
        self.assertEqual(q.t_max, 6.0)
        self.assertEqual(q.pv_epsilons, (0.2, 0.1, 0.05))

    def test_validation(self):
        with self.assertRaises(ValueError):
            QuadratureSpec(n=8)
        with self.assertRaises(ValueError):
            QuadratureSpec(pv_epsilons=(0.1, 0.1))
        with self.assertRaises(ValueError):
            QuadratureSpec(pv_epsilons=(0.1, -0.05))
        with self.assertRaises(ValueError):
            QuadratureSpec(rule='simpson')

    def test_negative_estimate_rejected(self):
        with self.assertRaises(ValueError):
            TransformResult(1.0, -1e-3)

    def test_aligned_rule_integrates_polynomials(self):
        nodes, weights = aligned_rule(-1.0, 2.0, np.linspace(-3, 3, 13), 8)
        self.assertAlmostEqual(np.sum(weights * nodes ** 3), (16.0 - 1.0) / 4.0, places=12)

    def test_extrapolate_pv_removes_odd_powers(self):
        epsilons = 0.1 * 2.0 ** -np.arange(5)
        sequence = 1.0 - 2.0 * epsilons + 0.5 * epsilons ** 3
        value, estimate, diagnostics = extrapolate_pv(sequence[:, None], epsilons)
        self.assertAlmostEqual(value[0], 1.0, places=12)
        self.assertAlmostEqual(diagnostics['observed_order'], 1.0, delta=0.05)

    def test_extrapolate_pv_divergence(self):
        epsilons = 0.1 * 2.0 ** -np.arange(5)
        with self.assertRaises(PVDivergence):
            extrapolate_pv((1.0 / epsilons)[:, None], epsilons)


class CauchyDiskTests(SimpleTestCase):

    def test_mean_value(self):
        result = cauchy_disk(on_circle(lambda phi: np.ones_like(phi)), 0.0)
        self.assertAlmostEqual(result.normalized, 1.0, places=14)
        self.assertAlmostEqual(result.value, 2 * np.pi, places=12)

    def test_reproduces_powers(self):
        a = 0.3 + 0.4j
        for k in range(9):
            result = cauchy_disk(on_circle(lambda phi, k=k: np.exp(1j * k * phi)), a)
            self.assertLess(abs(result.normalized - a ** k), 1e-12)

    def test_antiholomorphic(self):
        result = cauchy_disk(on_circle(lambda phi: np.exp(-1j * phi)), 0.3 + 0.4j)
        self.assertLess(abs(result.normalized), 1e-12)

    def test_polynomial_boundary_values(self):
        coefficients = make_rng(3).normal(size=11)
        polynomial = np.polynomial.Polynomial(coefficients)
        a = 0.85 * np.exp(0.4j)
        result = cauchy_disk(lambda phi: polynomial(np.exp(1j * phi)), a)
        self.assertLess(abs(result.normalized - polynomial(a)) / abs(polynomial(a)), 1e-8)

    def test_outside(self):
        with self.assertRaises(OutOfDomain):
            cauchy_disk(on_circle(lambda phi: np.ones_like(phi), 64), 1.0)

    def test_error_estimate_small_for_smooth_data(self):
        result = cauchy_disk(on_circle(lambda phi: np.exp(2j * phi)), 0.5)
        self.assertLess(result.quadrature_error_estimate, 1e-12)


class BergmanTests(SimpleTestCase):

    def setUp(self):
        self.grid = PolarGrid(96, 96)

    def test_raw_value_at_origin(self):
        result = bergman(2, lambda w: np.ones_like(w), 0.0, grid=self.grid)
        self.assertAlmostEqual(result.value.real, np.pi / 4, places=12)
        self.assertAlmostEqual(result.normalized.real, 1.0, places=12)

    def test_constant_anywhere(self):
        for a in (0.5, -0.3 + 0.6j, 0.85j):
            result = bergman(2, lambda w: np.ones_like(w), a, grid=self.grid)
            self.assertAlmostEqual(result.value.real, (1 - abs(a) ** 2) * np.pi / 4, places=6)
            self.assertLess(abs(result.normalized - 1.0), 1e-4)

    def test_odd_function_vanishes_at_origin(self):
        result = bergman(2, DiskFunction(lambda w: w, self.grid), 0.0)
        self.assertLess(abs(result.normalized), 1e-13)

    def test_reproduces_holomorphic(self):
        a = 0.4 - 0.2j
        result = bergman(3, lambda w: 1 + w ** 2, a, grid=self.grid)
        self.assertLess(abs(result.normalized - (1 + a ** 2)), 1e-10)

    def test_validation(self):
        with self.assertRaises(ValueError):
            bergman(1, lambda w: w, 0.0)
        with self.assertRaises(OutOfDomain):
            bergman(2, lambda w: w, 1.5)


class KernelTests(SimpleTestCase):

    def test_origin(self):
        self.assertTrue(kernel_tilde(Vector11(0.0, 0.0), BranchCoord(0, 0.0)).is_close(EvenNumber.scalar(1.0)))

    def test_two_e1(self):
        value = kernel_tilde(Vector11(2.0, 0.0), BranchCoord(0, 0.0))
        self.assertTrue(value.is_close(EvenNumber.scalar(1.0 / 3.0)))

    def test_closed_form_components(self):
        u, t = Vector11(0.3, -0.2), 0.7
        value = kernel_tilde(u, BranchCoord(0, t))
        self.assertAlmostEqual(value.a1, 1.0 / (math.exp(t) + 0.5), places=14)
        self.assertAlmostEqual(value.a2, 1.0 / (math.exp(-t) + 0.1), places=14)

    def test_branch_sign_flips_u(self):
        u = Vector11(0.3, -0.2)
        self.assertTrue(kernel_tilde(u, BranchCoord(1, 0.4)).is_close(kernel_tilde(-u, BranchCoord(0, 0.4))))

    def test_sheets_share_the_kernel(self):
        u = Vector11(0.3, -0.2)
        self.assertTrue(kernel_tilde(u, BranchCoord(2, 0.4)).is_close(kernel_tilde(u, BranchCoord(0, 0.4))))

    def test_singular_point(self):
        with self.assertRaises(LightConeSingularity):
            kernel_tilde(Vector11(2.0, 0.0), BranchCoord(1, math.log(2.0)))

    def test_fractional_power_of_negative_component(self):
        with self.assertRaises(DomainError):
            kernel_tilde(Vector11(2.0, 0.0), BranchCoord(1, 0.0), sigma=0.5)

    def test_sio1_multiplies_by_z(self):
        u, coord = Vector11(0.2, 0.1), BranchCoord(0, -0.6)
        expected = kernel_tilde(u, coord, 0.4) * EvenNumber(math.exp(-0.6), math.exp(0.6))
        self.assertTrue(sio1_integrand(u, coord, 0.4).is_close(expected))

    def test_vectorized_matches_scalar(self):
        u = Vector11(0.25, 0.1)
        t = np.linspace(-2, 2, 9)
        values = kernel_values(u, 1, t, 0.3)
        for j, t_j in enumerate(t):
            scalar = kernel_tilde(u, BranchCoord(2, t_j), 0.3)
            self.assertAlmostEqual(values.a1[j], scalar.a1, places=13)
            self.assertAlmostEqual(values.a2[j], scalar.a2, places=13)

    def test_multiply_back(self):
        rng = make_rng(11)
        for _ in range(20):
            u = Vector11(*rng.uniform(-0.1, 0.1, size=2))
            coord = BranchCoord(int(rng.integers(4)), float(rng.uniform(-1.5, 1.5)))
            self.assertLess(checks._multiply_back_error(u, coord), 1e-12)

    def test_conjugate_coherent_state_relation(self):
        sigma, u = 0.35, Vector11(0.4, 0.02)
        state = coherent_state(RepParam.hyperbolic(sigma), TildePoint(Sheet.MINUS, -u), n=101, t_max=3.0)
        expected = sio1_values(u, 1, state.grid, sigma) * math.sqrt(1.0 + u.square())
        np.testing.assert_allclose(state.values.a2[0], expected.a1, atol=1e-12)
        np.testing.assert_allclose(state.values.a1[0], expected.a2, atol=1e-12)


class HyperbolicTransformTests(SimpleTestCase):

    def setUp(self):
        self.q = QuadratureSpec.from_settings(t_max=8.0)
        self.bump = checks.tilde_bump()

    def test_zero_function(self):
        zero = BoundaryFunction.on_tilde(lambda branch, t: np.zeros_like(t), 201, 6.0)
        result = cauchy_tilde_pv(0.3, zero, TildePoint(Sheet.MINUS, Vector11(0.2, 0.1)), self.q)
        self.assertEqual(result.value.a1, 0.0)
        self.assertEqual(result.value.a2, 0.0)

    def test_regular_branch_against_direct_quadrature(self):
        # u = 2e1 has no singular point on branch 0
        u = TildePoint(Sheet.PLUS, Vector11(2.0, 0.0))
        f = BoundaryFunction.on_tilde(lambda branch, t: np.exp(-t ** 2) * (branch == 0), 4001, 8.0)
        result = cauchy_tilde_pv(0.0, f, u, self.q)
        t = np.linspace(-8, 8, 40001)
        integrand = sio1_values(u, 1, t) * np.exp(-t ** 2)
        expected = math.sqrt(3.0) * trapezoid(integrand.a1, t)
        self.assertAlmostEqual(result.value.a1, expected, delta=1e-8)
        self.assertAlmostEqual(result.normalized.a1 * math.sqrt(3.0), result.value.a1, places=12)

    def test_principal_value_flags_and_estimate(self):
        result = cauchy_tilde_pv(0.0, self.bump, TildePoint(Sheet.MINUS, Vector11(0.3, -0.1)), self.q)
        self.assertGreater(len(result.flags), 0)
        self.assertEqual(result.pv_epsilon, self.q.pv_epsilons[-1])
        self.assertTrue(np.isfinite(result.value.a1) and np.isfinite(result.value.a2))
        self.assertLess(result.quadrature_error_estimate, 1e-6)

    def test_halving_ratio(self):
        result = cauchy_tilde_pv(0.0, self.bump, TildePoint(Sheet.MINUS, Vector11(0.3, -0.1)), self.q)
        steps = np.asarray(result.diagnostics['steps'])
        np.testing.assert_allclose(steps[2:] / steps[1:-1], 0.5, atol=0.05)

    def test_outside_disk(self):
        with self.assertRaises(OutOfDomain):
            cauchy_tilde_pv(0.0, self.bump, TildePoint(Sheet.PLUS, Vector11(0.2, 0.0)), self.q)

    def test_double_pole_diverges(self):
        f = BoundaryFunction.on_tilde(lambda branch, t: np.exp(-(t - math.log(2.0)) ** 2) * (branch == 1), 801, 8.0)
        with self.assertRaises(PVDivergence):
            cauchy_tilde_pv(1.0, f, TildePoint(Sheet.PLUS, Vector11(2.0, 0.0)), self.q)

    def test_truncation_estimate_for_slow_tail(self):
        tail = BoundaryFunction.on_tilde(lambda branch, t: (branch == 0) / (1.0 + t ** 2), 1601, 16.0)
        point = TildePoint(Sheet.PLUS, Vector11(2.0, 0.0))
        short = cauchy_tilde_pv(0.0, tail, point, QuadratureSpec.from_settings(t_max=4.0))
        longer = cauchy_tilde_pv(0.0, tail, point, QuadratureSpec.from_settings(t_max=8.0))
        truncation = short.diagnostics['truncation']
        self.assertGreater(truncation, 1e-3)
        gap = max(abs(short.normalized.a1 - longer.normalized.a1), abs(short.normalized.a2 - longer.normalized.a2))
        self.assertAlmostEqual(truncation, gap, places=10)
        self.assertGreaterEqual(short.quadrature_error_estimate, math.sqrt(3.0) * truncation)

    def test_no_truncation_when_data_ends_at_t_max(self):
        result = cauchy_tilde_pv(0.0, self.bump, TildePoint(Sheet.MINUS, Vector11(0.2, 0.1)), self.q)
        self.assertEqual(result.diagnostics['truncation'], 0.0)


class HardyNormTests(SimpleTestCase):

    def setUp(self):
        self.q = QuadratureSpec.from_settings(t_max=10.0)

    def test_zero(self):
        self.assertEqual(hardy_norm(lambda point: EvenNumber.scalar(0.0 * point.u.u1), -0.5, self.q), 0.0)

    def test_scaling(self):
        base = hardy_norm(branch_kernel, -0.5, self.q)
        scaled = hardy_norm(lambda point: branch_kernel(point) * 3.0, -0.5, self.q)
        self.assertAlmostEqual(scaled / base, 9.0, places=10)

    def test_kernel_finite_over_grid(self):
        profile = hardy_profile(branch_kernel, np.linspace(-0.9, -0.1, 9), self.q)
        self.assertTrue(all(np.isfinite(row['norm']) and row['norm'] > 0 for row in profile['rows']))

    def test_bad_radius(self):
        with self.assertRaises(BadRadius):
            hardy_norm(branch_kernel, 0.5, self.q)


class IntertwiningTests(SimpleTestCase):

    def setUp(self):
        coefficients = make_rng(5).normal(size=9) + 1j * make_rng(6).normal(size=9)
        self.f = on_circle(lambda phi: np.exp(1j * np.multiply.outer(phi, np.arange(-4, 5))) @ coefficients, 1024)

    def test_induced_action_of_identity(self):
        from moebius.group import GroupElement
        a_prime, chi = induced_disk_action(GroupElement.identity(), 0.3 - 0.2j)
        self.assertAlmostEqual(a_prime, 0.3 - 0.2j, places=14)
        self.assertAlmostEqual(chi, 1.0, places=14)

    def test_identity(self):
        from moebius.group import GroupElement
        residual = intertwining_residual(RepParam.mock(), GroupElement.identity(), self.f, [0.2, -0.5j])
        self.assertLess(residual, 1e-12)

    def test_disk(self):
        rng = make_rng(7)
        for _ in range(3):
            g = random_unimodular(rng, scale=0.5)
            self.assertLess(intertwining_residual(RepParam.mock(), g, self.f, [0.1 + 0.2j, -0.6, 0.5j]), 1e-5)

    def test_hyperbolic_subgroup_a(self):
        f = checks.tilde_bump()
        q = QuadratureSpec.from_settings(t_max=8.0)
        g = one_param(A, 7 * f.spacing)
        point = TildePoint(Sheet.MINUS, Vector11(0.3, -0.1))
        residual, estimate = intertwining_residual(RepParam.hyperbolic(0.0), g, f, [point], q, with_estimate=True)
        self.assertLessEqual(residual, estimate + 1e-12)

    def test_unsupported_series(self):
        with self.assertRaises(ValueError):
            intertwining_residual(RepParam.principal(0.0), random_unimodular(make_rng(1)), self.f, [0.0])


class ExperimentTests(SimpleTestCase):

    def test_equivalence_scan_at_identity(self):
        rows = equivalence_scan((0.0,), n=401, t_max=6.0)
        self.assertAlmostEqual(rows[0]['mock'][0], 1.0, places=12)
        self.assertAlmostEqual(rows[0]['hyperbolic'], 1.0, places=12)


class TransformSuiteTests(SimpleTestCase):

    def test_suite_passes(self):
        results = checks.run(make_rng(42), samples=4, elements=3, pv_points=5)
        failed = [c['name'] for c in results if c['status'] == 'fail']
        self.assertEqual(failed, [])

    def test_recorded_counts(self):
        results = {c['name']: c for c in checks.run(make_rng(7), samples=2, elements=3, pv_points=4)}
        self.assertEqual(results['intertwining_disk']['elements'], 3)
        self.assertEqual(results['intertwining_tilde_below_estimate']['elements'], 3)
        self.assertEqual(results['pv_monotone_steps']['points'], 4)
        self.assertLessEqual(results['pv_monotone_steps']['measured'], 4)

    def test_default_counts(self):
        parameters = inspect.signature(checks.run).parameters
        self.assertEqual(parameters['elements'].default, 20)
        self.assertEqual(parameters['pv_points'].default, 50)
