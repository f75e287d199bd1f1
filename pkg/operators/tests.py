import math

import numpy as np
from django.test import SimpleTestCase

from clifford.algebra import Cliff11, EvenNumber, Vector11
from core.numerics import make_rng
from moebius.exceptions import OutOfDomain
from moebius.geometry import BranchCoord, Sheet, TildePoint
from representations.boundary import BoundaryFunction
from representations.lie import A, B, Z
from transforms.quadrature import QuadratureSpec
from . import checks
from .dirac import SIGNATURE, annihilation_residual, dirac, laplacian
from .fields import FieldSample
from .generators import bracket_defect, flow, flow_generator, generator_slope, rho_generator


class FieldSampleTests(SimpleTestCase):

    def test_default_step(self):
        self.assertEqual(FieldSample('halfplane', lambda z: z).step, 1e-4)

    def test_validation(self):
        with self.assertRaises(ValueError):
            FieldSample('sphere', lambda z: z)
        with self.assertRaises(ValueError):
            FieldSample('disk', lambda z: z, step=0.0)

    def test_tilde_halfplane_coordinates(self):
        f = FieldSample('tilde_halfplane', lambda u: u)
        np.testing.assert_array_equal(f.coordinates(Vector11(2.0, 3.0)), [3.0, 2.0])
        point = f.point_at(TildePoint(Sheet.MINUS, Vector11(0.0, 0.0)), [3.0, 2.0])
        self.assertEqual(point.sheet, Sheet.MINUS)
        self.assertTrue(point.u.is_close(Vector11(2.0, 3.0)))

    def test_partials_of_clifford_values(self):
        f = FieldSample('tilde_disk', lambda u: Cliff11(u.u1 ** 2, 0.0, u.u2, 0.0))
        np.testing.assert_allclose(f.partial(Vector11(0.5, 0.2), 0), [1.0, 0.0, 0.0, 0.0], atol=1e-10)
        np.testing.assert_allclose(f.partial(Vector11(0.5, 0.2), 1), [0.0, 0.0, 1.0, 0.0], atol=1e-10)


class GeneratorTests(SimpleTestCase):

    def test_real_part_is_invariant_under_a(self):
        f = FieldSample('halfplane', lambda z: z.real)
        self.assertAlmostEqual(abs(rho_generator('halfplane', 'A', f, 0.3 + 1.2j)), 0.0, places=10)

    def test_imaginary_part_under_a(self):
        f = FieldSample('halfplane', lambda z: z.imag)
        self.assertAlmostEqual(rho_generator('halfplane', 'A', f, 0.3 + 1.5j), 3.0, places=8)

    def test_flow_formula(self):
        moved = flow('halfplane', 'A', 0.4 + 0.7j, 0.3)
        self.assertAlmostEqual(moved, 0.4 + 0.7j * math.exp(0.6), places=12)

    def test_flow_matches_closed_form(self):
        f = checks.cubic_field()
        for z in (0.3 + 0.8j, -0.6 + 1.5j):
            for X in ('A', 'B'):
                closed = rho_generator('halfplane', X, f, z)
                flowed = rho_generator('halfplane', X, f, z, method='flow')
                self.assertLess(abs(closed - flowed), 1e-6)

    def test_tilde_closed_forms(self):
        point = Vector11(1.2, -0.4)
        for X in ('A', 'Z'):
            value = rho_generator('tilde_halfplane', X, FieldSample('tilde_halfplane', checks.tilde_polynomial), point)
            self.assertTrue(value.is_close(checks.tilde_polynomial_generator(X, point), atol=1e-6))

    def test_lie_elements_accepted(self):
        f = checks.cubic_field()
        self.assertEqual(rho_generator('halfplane', A, f, 1j), rho_generator('halfplane', 'A', f, 1j))

    def test_order_two(self):
        f = checks.cubic_field()
        z = 0.2 + 0.9j
        for X in ('A', 'B'):
            _, order = generator_slope('halfplane', X, f, z, checks.cubic_generator(X, z))
            self.assertAlmostEqual(order, 2.0, delta=0.2)

    def test_admitted_generators(self):
        self.assertTrue(flow_generator('halfplane', 'B').is_close(2.0 * B))
        self.assertTrue(flow_generator('tilde_halfplane', Z).is_close(Z))
        with self.assertRaises(ValueError):
            flow_generator('halfplane', 'Z')
        with self.assertRaises(ValueError):
            flow_generator('tilde_halfplane', 'B')
        with self.assertRaises(ValueError):
            flow_generator('disk', 'A')

    def test_lower_half_plane(self):
        with self.assertRaises(OutOfDomain):
            rho_generator('halfplane', 'A', checks.cubic_field(), 0.5 - 1j)

    def test_bracket_defect_is_reported(self):
        # rho(Z) vanishes on H while [rho(A), rho(B)] = 4y d_x does not
        report = bracket_defect(FieldSample('halfplane', lambda z: z.real), 0.1 + 0.5j)
        self.assertAlmostEqual(report['bracket'], 0.0, places=8)
        self.assertAlmostEqual(report['defect'], 2.0, delta=1e-4)


class DiracTests(SimpleTestCase):

    def test_holomorphic(self):
        self.assertLess(abs(dirac('halfplane', FieldSample('halfplane', lambda z: z ** 2), 0.4 + 0.9j)), 1e-8)

    def test_conjugate(self):
        self.assertAlmostEqual(dirac('halfplane', FieldSample('halfplane', np.conj), 1 + 2j), 4.0, places=8)

    def test_disk_conjugate(self):
        self.assertAlmostEqual(dirac('disk', FieldSample('disk', np.conj), 0.3j), 1.0, places=8)

    def test_kernel_annihilated_from_the_right(self):
        coord = BranchCoord(0, 0.3)
        field = checks.kernel_field('tilde_halfplane', coord)
        for u in (Vector11(0.4, 0.1), Vector11(0.9, -0.5)):
            residual = dirac('tilde_halfplane', field, u, side='right')
            self.assertLess(np.max(np.abs(residual.coefficients)), 1e-6)

    def test_left_side_leaves_a_residue(self):
        field = checks.kernel_field('tilde_halfplane', BranchCoord(0, 0.3))
        residue = dirac('tilde_halfplane', field, Vector11(0.4, 0.1), side='left')
        self.assertGreater(np.max(np.abs(residue.coefficients)), 1e-2)

    def test_bad_side(self):
        with self.assertRaises(ValueError):
            dirac('tilde_disk', checks.kernel_field('tilde_disk', BranchCoord(0, 0.0)), Vector11(0.1, 0.0), side='up')

    def test_domain_mismatch(self):
        with self.assertRaises(ValueError):
            dirac('disk', checks.cubic_field(), 0.1j)


class LaplacianTests(SimpleTestCase):

    def test_signature_from_clifford_squares(self):
        self.assertEqual(SIGNATURE, (-1.0, 1.0))

    def test_harmonic_polynomial(self):
        f = FieldSample('halfplane', lambda z: (z ** 3).real)
        self.assertLess(abs(laplacian('halfplane', f, 0.5 + 1.1j)), 1e-5)

    def test_modulus_squared(self):
        f = FieldSample('halfplane', lambda z: abs(z) ** 2)
        self.assertAlmostEqual(laplacian('halfplane', f, 0.3 + 2.0j).real, 16.0, places=5)

    def test_wave_operator_on_kernel_components(self):
        field = checks.kernel_field('tilde_disk', BranchCoord(1, -0.2))
        components = laplacian('tilde_disk', field, Vector11(0.1, 0.3)).even
        self.assertLess(abs(components.a1), 1e-5)
        self.assertLess(abs(components.a2), 1e-5)

    def test_wave_operator_on_non_null_function(self):
        f = FieldSample('tilde_disk', lambda u: EvenNumber.scalar(u.u1 ** 2))
        value = laplacian('tilde_disk', f, Vector11(0.2, 0.1))
        self.assertAlmostEqual(value.c0, -2.0, places=5)


class AnnihilationTests(SimpleTestCase):

    def test_disk_polynomial(self):
        polynomial = np.polynomial.Polynomial(make_rng(2).normal(size=6))
        f = BoundaryFunction.on_circle(lambda phi: polynomial(np.exp(1j * phi)), 512)
        grid = [0.0, 0.5, -0.4j, 0.8 * np.exp(1j)]
        report = annihilation_residual('disk', f, grid)
        self.assertLess(report['max_residual'], 1e-5)
        self.assertEqual(len(report['grid']), 4)

    def test_zero_data(self):
        f = BoundaryFunction.on_circle(lambda phi: np.zeros_like(phi), 64)
        self.assertEqual(annihilation_residual('disk', f, [0.1])['max_residual'], 0.0)

    def test_tilde_single_branch_bump(self):
        bump = BoundaryFunction.on_tilde(lambda branch, t: np.exp(-t ** 2) * (branch == 0), 801, 8.0)
        points = [TildePoint(Sheet.MINUS, Vector11(0.5, 0.1))]
        report = annihilation_residual('tilde', bump, points, QuadratureSpec.from_settings(t_max=8.0))
        self.assertLessEqual(report['max_residual'], max(report['error_estimate'], 1e-6))
        self.assertEqual(report['grid'], [['minus', 0.5, 0.1]])

    def test_unknown_theory(self):
        with self.assertRaises(ValueError):
            annihilation_residual('sphere', None, [])


class OperatorSuiteTests(SimpleTestCase):

    def test_suite_passes(self):
        results = checks.run(make_rng(42), samples=5)
        failed = [c['name'] for c in results if c['status'] == 'fail']
        self.assertEqual(failed, [])
