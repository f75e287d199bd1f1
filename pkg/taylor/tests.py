import math

import numpy as np
from django.test import SimpleTestCase

from clifford.algebra import EvenNumber, Vector11
from core.numerics import make_rng
from moebius.exceptions import OutOfDomain
from moebius.geometry import BranchCoord, Sheet, TildePoint
from representations.boundary import BoundaryFunction
from transforms.cauchy import cauchy_disk
from transforms.hyperbolic import cauchy_tilde_pv, kernel_tilde
from transforms.quadrature import QuadratureSpec
from . import checks
from .classical import classical_coefficients, classical_expand, classical_taylor_value, multipliers
from .coefficients import TaylorCoefficients
from .exceptions import ConvergenceError, NonInvertible
from .hyperbolic import (e1u_components, geometric_expand, hyperbolic_expand, hyperbolic_taylor_value,
                         interval_series, laplace_table_check, mellin_coefficient, mellin_coefficients)


class TaylorCoefficientsTests(SimpleTestCase):

    def test_discrete_rows(self):
        coefficients = TaylorCoefficients('discrete', [1, 2], np.array([1 + 2j, -1j]))
        self.assertEqual(coefficients.rows(), [(1.0, 1.0, 2.0), (2.0, 0.0, -1.0)])
        self.assertEqual(len(coefficients), 2)

    def test_continuous_components(self):
        coefficients = TaylorCoefficients('continuous', [0.0, 0.5], EvenNumber(np.array([1.0, 2.0]), np.zeros(2)))
        first, second = coefficients.components
        np.testing.assert_array_equal(first, [1.0, 2.0])
        np.testing.assert_array_equal(second, [0.0, 0.0])

    def test_validation(self):
        with self.assertRaises(ValueError):
            TaylorCoefficients('spectral', [1], np.ones(1))
        with self.assertRaises(ValueError):
            TaylorCoefficients('discrete', [0, 1], np.ones(2))
        with self.assertRaises(ValueError):
            TaylorCoefficients('continuous', [-1.0], EvenNumber(np.ones(1), np.ones(1)))
        with self.assertRaises(ValueError):
            TaylorCoefficients('discrete', [1, 2, 3], np.ones(2))

    def test_decay_ratio(self):
        coefficients = TaylorCoefficients('discrete', np.arange(1, 6), 0.5 ** np.arange(5) + 0j)
        self.assertAlmostEqual(coefficients.decay_ratio(), 0.5, places=12)


class LaplaceTableTests(SimpleTestCase):

    def test_half(self):
        lhs, rhs = laplace_table_check(0.5, 1.0, 1.0)
        self.assertAlmostEqual(lhs, 1.0 / (math.e - 0.5), places=14)
        self.assertAlmostEqual(lhs, 0.450840, places=6)
        self.assertAlmostEqual(rhs, lhs, places=12)

    def test_a_equal_one_uses_the_limit(self):
        lhs, rhs = laplace_table_check(1.0, 2.0, 0.5)
        self.assertAlmostEqual(rhs, lhs, places=12)

    def test_a_zero(self):
        lhs, rhs = laplace_table_check(0.0, 1.0, 2.0)
        self.assertAlmostEqual(rhs, math.exp(-2.0) / 2.0, places=14)
        self.assertAlmostEqual(lhs, rhs, places=14)

    def test_negative_a(self):
        lhs, rhs = laplace_table_check(-1.5, 1.0, 1.0)
        self.assertAlmostEqual(lhs, rhs, places=12)

    def test_truncated_sum(self):
        lhs, rhs = laplace_table_check(0.5, 1.0, 1.0, intervals=3)
        self.assertGreater(abs(lhs - rhs), 1e-4)

    def test_divergence(self):
        with self.assertRaises(ConvergenceError):
            laplace_table_check(math.e, 1.0, 1.0)
        with self.assertRaises(ConvergenceError):
            laplace_table_check(0.5, 1.0, 0.0)
        with self.assertRaises(ValueError):
            laplace_table_check(0.5, 0.0, 1.0)

    def test_rounded_boundary_rate(self):
        for k, t in ((1.0, 2.3), (0.5, 0.7), (2.0, 1.1)):
            with self.subTest(k=k, t=t):
                with self.assertRaises(ConvergenceError):
                    laplace_table_check(math.exp(k * t), k, t)

    def test_interval_count(self):
        _, count = interval_series(0.5, 1.0, 1.0)
        self.assertGreater(count, 30)
        self.assertEqual(interval_series(0.5, 1.0, 1.0, intervals=7)[1], 7)


class HyperbolicExpandTests(SimpleTestCase):

    def test_components_of_e1u(self):
        np.testing.assert_allclose(e1u_components(Vector11(0.3, 0.1)), [-0.2, -0.4])
        np.testing.assert_allclose(e1u_components(Vector11(0.3, 0.1), -1), [0.2, 0.4])

    def test_origin_gives_inverse_of_z(self):
        value = hyperbolic_expand(Vector11(0.0, 0.0), 0.7)
        self.assertAlmostEqual(value.a1, math.exp(-0.7), places=14)
        self.assertAlmostEqual(value.a2, math.exp(0.7), places=14)

    def test_continued_components_match_series(self):
        # |a| e^{-s} > 1 in both components: reflected geometric series
        u = Vector11(2.0, 0.0)
        value, flags = hyperbolic_expand(u, 0.2, with_flags=True)
        self.assertEqual(flags, ('p1: continued', 'p2: continued'))
        self.assertAlmostEqual(value.a1, checks.geometric_component(-2.0, 0.2), places=12)
        self.assertAlmostEqual(value.a2, checks.geometric_component(-2.0, -0.2), places=12)
        self.assertAlmostEqual(value.a1, 1.0 / (math.exp(0.2) + 2.0), places=14)

    def test_continued_component_matches_geometric_sums(self):
        # s < 0 but |a| e^{-s} < 1: the geometric decomposition still converges
        u = Vector11(0.1, 0.05)
        value, flags = hyperbolic_expand(u, 1.3, with_flags=True)
        self.assertEqual(flags, ('p2: continued',))
        sums, _ = geometric_expand(u, 1.3, 200)
        self.assertAlmostEqual(value.a2, sums.a2[-1], places=12)
        self.assertAlmostEqual(value.a1, sums.a1[-1], places=12)

    def test_geometric_component_branches(self):
        self.assertAlmostEqual(checks.geometric_component(0.0, 1.5), math.exp(-1.5), places=15)
        self.assertAlmostEqual(checks.geometric_component(0.5, -0.3), 1.0 / (math.exp(-0.3) - 0.5), places=12)
        self.assertAlmostEqual(checks.geometric_component(3.0, 0.4), 1.0 / (math.exp(0.4) - 3.0), places=12)

    def test_classical_components_match_kernel(self):
        u = Vector11(0.1, 0.05)
        value, flags = hyperbolic_expand(u, 1.3, with_flags=True)
        self.assertTrue(value.is_close(kernel_tilde(u, BranchCoord(0, 1.3)), atol=1e-10))
        self.assertEqual(flags, ('p2: continued',))

    def test_branch_sign(self):
        u = TildePoint(Sheet.MINUS, Vector11(0.3, -0.2))
        coord = BranchCoord(3, 0.8)
        self.assertTrue(hyperbolic_expand(u, coord).is_close(kernel_tilde(u, coord), atol=1e-10))

    def test_boundary_of_convergence(self):
        with self.assertRaises(ConvergenceError):
            hyperbolic_expand(Vector11(0.0, 0.0), 0.0)
        # |a1| e^{-t} = 1 with a1 = -e
        with self.assertRaises(ConvergenceError):
            hyperbolic_expand(Vector11(math.e, 0.0), 1.0)

    def test_non_invertible(self):
        with self.assertRaises(NonInvertible):
            hyperbolic_expand(Vector11(-1.0, 0.0), 0.5)


class GeometricExpandTests(SimpleTestCase):

    def test_ratio(self):
        _, ratio = geometric_expand(Vector11(0.2, 0.0), 1.0, 25)
        self.assertAlmostEqual(ratio, 0.2 * math.e, places=12)

    def test_partial_sums_converge_to_kernel(self):
        u = Vector11(0.2, 0.0)
        sums, _ = geometric_expand(u, 1.0, 120)
        kernel = kernel_tilde(u, BranchCoord(0, 1.0))
        self.assertAlmostEqual(sums.a1[-1], kernel.a1, places=12)
        self.assertAlmostEqual(sums.a2[-1], kernel.a2, places=12)
        self.assertEqual(len(sums.a1), 121)

    def test_origin(self):
        sums, ratio = geometric_expand(Vector11(0.0, 0.0), 0.4, 5)
        np.testing.assert_allclose(sums.a1, math.exp(-0.4))
        self.assertEqual(ratio, 0.0)

    def test_divergence(self):
        with self.assertRaises(ConvergenceError):
            geometric_expand(Vector11(2.0, 0.0), 0.2, 10)

    def test_rounded_boundary_rate(self):
        # a2 e^{t} = 1 up to rounding: 0.9999999999999999 at t = 2.3
        for t in (0.1, 0.3, 0.45, 0.7, 0.9, 1.1, 1.7, 2.3):
            with self.subTest(t=t):
                with self.assertRaises(ConvergenceError):
                    geometric_expand(Vector11(0.0, -math.exp(-t)), t, 10)

    def test_negative_order(self):
        with self.assertRaises(ValueError):
            geometric_expand(Vector11(0.0, 0.0), 0.4, -1)


class ClassicalTests(SimpleTestCase):

    def test_limit_at_zero_angle(self):
        partial = classical_expand(0.5, 0.0, 60)
        self.assertAlmostEqual(partial[-1].real, 1.7320508, places=7)
        self.assertAlmostEqual(partial[-1].imag, 0.0, places=14)

    def test_multipliers(self):
        np.testing.assert_allclose(multipliers(0.5j, 3), math.sqrt(0.75) * np.array([1.0, -0.5j, -0.25]))

    def test_outside_disk(self):
        with self.assertRaises(OutOfDomain):
            classical_expand(1.0, 0.0, 5)
        with self.assertRaises(ValueError):
            classical_expand(0.5, 0.0, 0)

    def test_orthogonality(self):
        f = BoundaryFunction.on_circle(lambda phi: np.exp(2j * phi), 128)
        values = classical_coefficients(f, 6).values
        np.testing.assert_allclose(values, [0, 0, 2 * np.pi, 0, 0, 0], atol=1e-12)

    def test_coefficient_validation(self):
        with self.assertRaises(ValueError):
            classical_coefficients(BoundaryFunction.on_circle(lambda phi: phi, 16), 17)
        with self.assertRaises(ValueError):
            classical_coefficients(checks.forward_bump(n=64), 4)

    def test_taylor_value_matches_cauchy(self):
        f = BoundaryFunction.on_circle(lambda phi: np.exp(3j * phi) + 0.5, 512)
        a = 0.4 - 0.3j
        self.assertAlmostEqual(classical_taylor_value(f, a, 120), cauchy_disk(f, a).value, places=10)

    def test_taylor_value_needs_samples(self):
        with self.assertRaises(TypeError):
            classical_taylor_value(lambda phi: phi, 0.1, 4)


class MellinTests(SimpleTestCase):

    def test_zero_function(self):
        zero = BoundaryFunction.on_tilde(lambda branch, t: np.zeros_like(t), 101, 4.0)
        value = mellin_coefficient(zero, 1.5)
        self.assertEqual((value.a1, value.a2), (0.0, 0.0))

    def test_linearity(self):
        f, g = checks.forward_bump(), checks.forward_bump(scale=-2.0)
        combined = f.with_values(f.values * 0.5 + g.values * 1.5)
        lhs = mellin_coefficient(combined, 2.0)
        rhs = mellin_coefficient(f, 2.0) * 0.5 + mellin_coefficient(g, 2.0) * 1.5
        self.assertTrue(lhs.is_close(rhs, atol=1e-12))

    def test_p_one_is_first_moment(self):
        f = checks.forward_bump()
        value = mellin_coefficient(f, 1.0)
        expected = float(np.sum(f.weights * f.grid * f.values.a1[0]))
        self.assertAlmostEqual(value.a1, expected, places=12)
        # s = -t on the second component
        self.assertAlmostEqual(value.a2, float(np.sum(f.weights * -f.grid * f.values.a2[0])), places=12)

    def test_grid(self):
        coefficients = mellin_coefficients(checks.forward_bump(), [0.0, 1.0, 2.0])
        self.assertEqual(coefficients.mode, 'continuous')
        self.assertEqual(len(coefficients), 3)

    def test_needs_tilde_data(self):
        with self.assertRaises(ValueError):
            mellin_coefficient(BoundaryFunction.on_circle(lambda phi: phi, 16), 1.0)


class TaylorTransformTests(SimpleTestCase):

    def test_matches_transform(self):
        f = checks.forward_bump()
        point = TildePoint(Sheet.MINUS, Vector11(0.2, 0.1))
        taylor = hyperbolic_taylor_value(f, point)
        transform = cauchy_tilde_pv(0.0, f, point, QuadratureSpec.from_settings(t_max=8.0, rule='trapezoid'))
        self.assertTrue(taylor.is_close(transform.normalized, atol=1e-10))

    def test_support_reaching_negative_exponents(self):
        f = BoundaryFunction.on_tilde(lambda branch, t: np.exp(-t ** 2) * (branch == 0), 201, 6.0)
        with self.assertRaises(ConvergenceError):
            hyperbolic_taylor_value(f, Vector11(0.1, 0.0))


class TaylorSuiteTests(SimpleTestCase):

    def test_suite_passes(self):
        results = checks.run(make_rng(42), samples=5)
        failed = [c['name'] for c in results if c['status'] == 'fail']
        self.assertEqual(failed, [])
