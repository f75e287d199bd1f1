import math

import numpy as np
from django.test import SimpleTestCase

from clifford.algebra import EvenNumber, Vector11, exp_bivector
from clifford.exceptions import DomainError
from core.numerics import make_rng
from moebius.actions import section
from moebius.exceptions import OutOfDomain
from moebius.geometry import Sheet, TildePoint
from moebius.group import GroupElement, cayley, diagonal_even, random_unimodular, to_su11
from . import checks
from .boundary import BoundaryFunction, DiskFunction, Domain, PolarGrid
from .lie import A, B, Z, LieElement, one_param
from .series import (
    RepParam, Series, apply_pi1, apply_pim, apply_pisigma, apply_pisigma_interior,
    apply_principal, apply_representation, clifford_inner, coherent_state,
)


def gaussian_on_tilde(n=2001, t_max=8.0):
    return BoundaryFunction.on_tilde(
        lambda branch, t: EvenNumber(np.exp(-t ** 2), (1 + 0.5 * branch) * np.exp(-(t - 0.2) ** 2)), n, t_max)


class LieAlgebraTests(SimpleTestCase):

    def test_bracket_table(self):
        self.assertTrue(Z.bracket(A).is_close(2 * B))
        self.assertTrue(Z.bracket(B).is_close(-2 * A))
        self.assertTrue(A.bracket(B).is_close(-0.5 * Z))

    def test_matrix_round_trip(self):
        x = LieElement(0.3, -1.2, 0.7)
        self.assertTrue(LieElement.from_matrix(x.matrix).is_close(x))

    def test_trace_rejected(self):
        with self.assertRaises(ValueError):
            LieElement.from_matrix(np.eye(2))

    def test_one_param_identity(self):
        self.assertTrue(one_param(A, 0.0).is_close(GroupElement.identity()))

    def test_rotation(self):
        self.assertTrue(one_param(Z, np.pi / 2).is_close(GroupElement.real(0.0, 1.0, -1.0, 0.0)))

    def test_closed_forms(self):
        t = 0.7
        self.assertTrue(one_param(A, t).is_close(GroupElement.real(math.exp(-t / 2), 0.0, 0.0, math.exp(t / 2))))
        expected = GroupElement.real(math.cosh(t / 2), math.sinh(t / 2), math.sinh(t / 2), math.cosh(t / 2))
        self.assertTrue(one_param(B, t).is_close(expected))


class BoundaryFunctionTests(SimpleTestCase):

    def test_circle_grid_and_weights(self):
        f = BoundaryFunction.on_circle(lambda phi: np.ones_like(phi), 64)
        self.assertEqual(f.size, 64)
        self.assertAlmostEqual(f.weights.sum(), 2 * np.pi, places=12)
        self.assertAlmostEqual(f.norm(), math.sqrt(2 * np.pi), places=12)

    def test_circle_interpolation(self):
        f = BoundaryFunction.on_circle(lambda phi: np.exp(2j * phi), 256)
        points = np.array([0.1, 1.3, 6.2])
        np.testing.assert_allclose(f.evaluate(points, interpolation='fourier'), np.exp(2j * points), atol=1e-12)
        np.testing.assert_allclose(f.evaluate(points, interpolation='cubic'), np.exp(2j * points), atol=1e-7)

    def test_tilde_zero_extension(self):
        f = gaussian_on_tilde(201, 4.0)
        value = f.evaluate(np.array([0, 3]), np.array([5.0, 0.0]))
        self.assertEqual(value.a1[0], 0.0)
        self.assertAlmostEqual(value.a1[1], 1.0, places=10)

    def test_unknown_interpolation(self):
        f = BoundaryFunction.on_circle(lambda phi: phi * 0, 8)
        with self.assertRaises(ValueError):
            f.evaluate([0.0], interpolation='linear')
        with self.assertRaises(ValueError):
            gaussian_on_tilde(21, 1.0).evaluate([0], [0.0], interpolation='fourier')


class MockDiscreteSeriesTests(SimpleTestCase):

    def test_identity(self):
        f = BoundaryFunction.on_circle(lambda phi: np.cos(phi) + 2j * np.sin(3 * phi), 128)
        self.assertLess(apply_pi1(GroupElement.identity(), f).max_difference(f), 1e-12)

    def test_vacuum_phase(self):
        psi = 0.7
        f0 = BoundaryFunction.on_circle(lambda phi: np.ones_like(phi), 128)
        h_psi = GroupElement.su11(np.exp(1j * psi), 0.0)
        # g^{-1} = h_psi supplies the coefficients
        image = apply_pi1(h_psi.inverse(), f0)
        np.testing.assert_allclose(image.values, np.exp(1j * psi), atol=1e-12)

    def test_unitarity(self):
        rng = make_rng(1)
        f = BoundaryFunction.on_circle(lambda phi: 1 + np.exp(1j * phi) - 0.5j * np.exp(-2j * phi), 1024)
        for _ in range(5):
            g = random_unimodular(rng, scale=0.6)
            self.assertAlmostEqual(apply_pi1(g, f).norm() / f.norm(), 1.0, delta=1e-6)

    def test_representation_property(self):
        rng = make_rng(2)
        f = BoundaryFunction.on_circle(lambda phi: np.exp(1j * phi) + 0.3 * np.exp(-3j * phi), 1024)
        g, h = random_unimodular(rng, scale=0.5), random_unimodular(rng, scale=0.5)
        two_step = apply_pi1(g, apply_pi1(h, f, interpolation='fourier'), interpolation='fourier')
        self.assertLess(two_step.max_difference(apply_pi1(g @ h, f, interpolation='fourier')), 1e-6)

    def test_wrong_domain(self):
        with self.assertRaises(ValueError):
            apply_pi1(GroupElement.identity(), gaussian_on_tilde(21, 1.0))


class DiscreteSeriesTests(SimpleTestCase):

    def setUp(self):
        self.grid = PolarGrid(64, 96)

    def test_identity(self):
        f = DiskFunction(lambda w: 1 + w ** 2, self.grid)
        np.testing.assert_allclose(apply_pim(2, GroupElement.identity(), f).values, f.values, atol=1e-14)

    def test_vacuum(self):
        g = random_unimodular(make_rng(4), scale=0.5)
        ginv = to_su11(g).inverse()
        alpha, beta = ginv.a, ginv.b
        f0 = DiskFunction(lambda w: np.ones_like(w), self.grid)
        w = self.grid.points
        np.testing.assert_allclose(apply_pim(3, g, f0).values,
                                   (np.conj(beta) * w + np.conj(alpha)) ** -3, atol=1e-12)

    def test_unitarity(self):
        rng = make_rng(5)
        f = DiskFunction(lambda w: 2 - w + 0.5j * w ** 2, self.grid)
        for m in (2, 3):
            g = random_unimodular(rng, scale=0.5)
            self.assertAlmostEqual(apply_pim(m, g, f).norm(m) / f.norm(m), 1.0, delta=1e-5)

    def test_representation_property(self):
        rng = make_rng(6)
        f = DiskFunction(lambda w: 1 + 3 * w ** 2, self.grid)
        g, h = random_unimodular(rng, scale=0.5), random_unimodular(rng, scale=0.5)
        two_step = apply_pim(2, g, apply_pim(2, h, f))
        np.testing.assert_allclose(two_step.values, apply_pim(2, g @ h, f).values, atol=1e-9)

    def test_bad_weight(self):
        with self.assertRaises(ValueError):
            apply_pim(1, GroupElement.identity(), DiskFunction(lambda w: w, self.grid))
        with self.assertRaises(ValueError):
            RepParam.discrete(1)


class HyperbolicSeriesTests(SimpleTestCase):

    def test_identity(self):
        f = gaussian_on_tilde(401, 5.0)
        self.assertLess(apply_pisigma(0.3, GroupElement.identity(), f).max_difference(f), 1e-12)

    def test_vacuum(self):
        sigma, tau = 0.4, 0.3
        unit = exp_bivector(tau)
        f0 = BoundaryFunction.on_tilde(lambda branch, t: np.ones_like(t), 401, 6.0)
        image = apply_pisigma(sigma, diagonal_even(unit).inverse(), f0)
        inside = np.abs(f0.grid) < 5.0
        expected = unit.power(-1 - 2 * sigma)
        np.testing.assert_allclose(image.values.a1[:, inside], expected.a1, atol=1e-12)
        np.testing.assert_allclose(image.values.a2[:, inside], expected.a2, atol=1e-12)
        self.assertEqual(image.flags, ())

    def test_eigenfunction_slope(self):
        eigenvalues, slope, deviation = checks.eigen_slope(0.3)
        self.assertLess(deviation, 1e-4)
        self.assertAlmostEqual(abs(slope), 2.0, delta=1e-4)

    def test_scalar_part_preserved_under_subgroup_a(self):
        f = gaussian_on_tilde()
        moved = apply_pisigma(0.6, one_param(A, 0.8), f)
        before, after = clifford_inner(f, f), clifford_inner(moved, moved)
        self.assertAlmostEqual(after.c0 / before.c0, 1.0, delta=1e-6)

    def test_representation_property_at_sigma_zero(self):
        rng = make_rng(8)
        f = gaussian_on_tilde(4001, 8.0)
        g, h = random_unimodular(rng, scale=0.2), random_unimodular(rng, scale=0.2)
        two_step = apply_pisigma(0.0, g, apply_pisigma(0.0, h, f))
        composite = apply_pisigma(0.0, g @ h, f)
        inside = np.abs(f.grid) < 1.5
        np.testing.assert_allclose(two_step.values.a1[:, inside], composite.values.a1[:, inside], atol=1e-6)
        np.testing.assert_allclose(two_step.values.a2[:, inside], composite.values.a2[:, inside], atol=1e-6)

    def test_fractional_power_flagged(self):
        f = gaussian_on_tilde(201, 4.0)
        g = cayley(GroupElement.real(0.0, -1.0, 1.0, 0.0))
        image = apply_pisigma(0.5, g, f)
        self.assertGreater(len(image.flags), 0)
        branch, index = image.flags[0]
        self.assertEqual(image.values.a1[branch, index], 0.0)
        with self.assertRaises(DomainError):
            apply_pisigma(0.5, g, f, strict=True)

    def test_interior_action(self):
        sigma, tau = 0.25, 0.4
        unit = exp_bivector(tau)
        g = diagonal_even(unit).inverse()
        transformed = apply_pisigma_interior(sigma, g, lambda u: EvenNumber(u.u1, u.u2))
        u = Vector11(0.3, 0.1)
        value = transformed(u)
        rotated = Vector11(0.3 * math.cosh(2 * tau) + 0.1 * math.sinh(2 * tau),
                           0.1 * math.cosh(2 * tau) + 0.3 * math.sinh(2 * tau))
        expected = unit.power(-1 - 2 * sigma) * EvenNumber(rotated.u1, rotated.u2)
        self.assertTrue(value.is_close(expected, atol=1e-12))


class PrincipalSeriesTests(SimpleTestCase):

    def setUp(self):
        self.f = BoundaryFunction.on_line(lambda x: np.exp(-4 * x ** 2) * (1 + 0.5j * x), 8001, 20.0)

    def test_identity(self):
        self.assertLess(apply_principal(0.7, GroupElement.identity(), self.f).max_difference(self.f), 1e-12)

    def test_dilation_unitary(self):
        g = GroupElement.real(math.exp(0.4), 0.0, 0.0, math.exp(-0.4))
        self.assertAlmostEqual(apply_principal(1.3, g, self.f).norm() / self.f.norm(), 1.0, delta=1e-6)

    def test_jacobian_identity(self):
        g = GroupElement.real(1.0, 0.0, -0.3, 1.0)
        self.assertAlmostEqual(apply_principal(0.0, g, self.f).norm() / self.f.norm(), 1.0, delta=1e-6)

    def test_representation_property_on_affine_group(self):
        g = GroupElement.real(math.exp(0.2), 0.3, 0.0, math.exp(-0.2))
        h = GroupElement.real(math.exp(-0.1), -0.5, 0.0, math.exp(0.1))
        two_step = apply_principal(0.5, g, apply_principal(0.5, h, self.f))
        self.assertLess(two_step.max_difference(apply_principal(0.5, g @ h, self.f)), 1e-6)

    def test_requires_real_matrix(self):
        with self.assertRaises(TypeError):
            apply_principal(0.0, cayley(GroupElement.identity()), self.f)


class CoherentStateTests(SimpleTestCase):

    def test_disk_origin(self):
        state = coherent_state(RepParam.mock(), 0.0, n=64)
        np.testing.assert_allclose(state.values, 1.0, atol=1e-15)

    def test_disk_value(self):
        state = coherent_state(RepParam.mock(), 0.5, n=64)
        self.assertAlmostEqual(state.values[0].real, 1.7320508075688772, places=12)

    def test_matches_representation(self):
        a = 0.3 - 0.4j
        f0 = BoundaryFunction.on_circle(lambda phi: np.ones_like(phi), 128)
        through_rep = apply_pi1(section('disk', a), f0)
        self.assertLess(coherent_state(RepParam.mock(), a, n=128).max_difference(through_rep), 1e-12)

    def test_discrete(self):
        grid = PolarGrid(32, 32)
        state = coherent_state(RepParam.discrete(2), 0.5, grid=grid)
        self.assertAlmostEqual(state(0.0), 0.75, places=14)

    def test_outside(self):
        with self.assertRaises(OutOfDomain):
            coherent_state(RepParam.mock(), 1.2)

    def test_tilde_matches_representation_on_minus_sheet(self):
        u = Vector11(0.5, 0.0)
        point = TildePoint(Sheet.MINUS, u)
        state = coherent_state(RepParam.hyperbolic(0.0), point, n=201, t_max=4.0)
        f0 = BoundaryFunction.on_tilde(lambda branch, t: np.ones_like(t), 201, 4.0)
        through_rep = apply_pisigma(0.0, section('tilde', point), f0)
        inside = np.abs(f0.grid) < 2.0
        np.testing.assert_allclose(state.values.a1[:, inside], through_rep.values.a1[:, inside], atol=1e-9)
        np.testing.assert_allclose(state.values.a2[:, inside], through_rep.values.a2[:, inside], atol=1e-9)

    def test_principal_has_no_vacuum(self):
        with self.assertRaises(ValueError):
            coherent_state(RepParam.principal(0.0), 0.0)


class DispatchTests(SimpleTestCase):

    def test_series_param(self):
        self.assertEqual(RepParam.hyperbolic(0.5).series, Series.HYPERBOLIC)
        f = BoundaryFunction.on_circle(lambda phi: np.exp(1j * phi), 32)
        image = apply_representation(RepParam.mock(), GroupElement.identity(), f)
        self.assertEqual(image.domain, Domain.CIRCLE)
        self.assertLess(image.max_difference(f), 1e-12)


class RepresentationSuiteTests(SimpleTestCase):

    def test_suite_passes(self):
        results = checks.run(make_rng(42), samples=4)
        failed = [c['name'] for c in results if c['status'] == 'fail']
        self.assertEqual(failed, [])
