import math

import numpy as np
from django.test import SimpleTestCase

from clifford.algebra import E1, E12, EvenNumber, Vector11, exp_bivector, kelvin_inverse
from core.numerics import make_rng
from . import checks
from .actions import (
    act, act_by_inverse, halfplane_section, invariant_density, jacobian_determinant,
    project, right_action, section, section_inverse,
)
from .exceptions import BadRadius, DegenerateElement, NotUnimodular, OutOfDomain, SingularDenominator
from .geometry import (
    BranchCoord, Sheet, TildePoint, branch_of, circle_point, in_disk, singular_points,
)
from .group import (
    GroupElement, Realization, cayley, diagonal_even, dilation, kelvin, random_unimodular,
    rotation, shift, to_su11,
)

G = GroupElement.real(2.0, 1.0, 1.0, 1.0)


def tilde(u1, u2, sheet=Sheet.PLUS):
    return TildePoint(sheet, Vector11(u1, u2))


class RealizationTests(SimpleTestCase):

    def test_su11_identity(self):
        self.assertTrue(to_su11(GroupElement.identity()).is_close(GroupElement.identity('su11')))

    def test_su11_example(self):
        image = to_su11(G)
        self.assertAlmostEqual(image.a, 1.5 + 0j, places=15)
        self.assertAlmostEqual(image.b, 1.0 + 0.5j, places=15)
        self.assertAlmostEqual(abs(image.a) ** 2 - abs(image.b) ** 2, 1.0, places=14)
        self.assertEqual(image.c, image.b.conjugate())

    def test_su11_homomorphism(self):
        rng = make_rng(3)
        for _ in range(50):
            g, h = random_unimodular(rng), random_unimodular(rng)
            self.assertTrue(to_su11(g @ h).is_close(to_su11(g) @ to_su11(h)))

    def test_not_unimodular(self):
        with self.assertRaises(NotUnimodular):
            to_su11(GroupElement.real(2.0, 0.0, 0.0, 1.0))
        with self.assertRaises(NotUnimodular):
            cayley(GroupElement.real(1.0, 1.0, 1.0, 1.0))

    def test_cayley_identity(self):
        image = cayley(GroupElement.identity())
        self.assertTrue(image.na.is_close(EvenNumber.scalar(1.0)))
        self.assertTrue(image.nb.is_close(Vector11(0.0, 0.0)))

    def test_cayley_example(self):
        image = cayley(G)
        self.assertAlmostEqual(image.na.c0, 1.5, places=15)
        self.assertAlmostEqual(image.na.c12, -0.5, places=15)
        self.assertTrue(image.nb.is_close(Vector11(1.0, 0.0)))
        self.assertAlmostEqual(image.determinant(), 1.0, places=14)

    def test_cayley_homomorphism(self):
        rng = make_rng(5)
        for _ in range(50):
            g, h = random_unimodular(rng), random_unimodular(rng)
            self.assertTrue(cayley(g @ h).is_close(cayley(g) @ cayley(h)))

    def test_inverse(self):
        for element in (G, to_su11(G), cayley(G)):
            product = element @ element.inverse()
            self.assertTrue(product.is_close(GroupElement.identity(element.realization)))

    def test_mixed_realizations_rejected(self):
        with self.assertRaises(TypeError):
            G @ cayley(G)


class SectionTests(SimpleTestCase):

    def test_disk_origin(self):
        self.assertTrue(section('disk', 0.0).is_close(GroupElement.identity(Realization.SU11)))

    def test_disk_example(self):
        expected = GroupElement(Realization.SU11, 1.25 + 0j, 0.75 + 0j, 0.75 + 0j, 1.25 + 0j)
        self.assertTrue(section('disk', 0.6).is_close(expected))
        self.assertAlmostEqual(section('disk', 0.6).determinant(), 1.0, places=14)

    def test_disk_outside(self):
        with self.assertRaises(OutOfDomain):
            section('disk', 1.0)

    def test_tilde_inside_light_cone(self):
        element = section('tilde', tilde(2.0, 0.0))
        k = 1.0 / math.sqrt(3.0)
        self.assertTrue(element.a.is_close(k))
        self.assertTrue(element.b.is_close(2 * k * E1))
        self.assertTrue(element.c.is_close(-2 * k * E1))
        self.assertAlmostEqual(element.determinant(), -1.0, places=14)
        self.assertEqual(element.sign, -1)

    def test_tilde_unit_circle(self):
        with self.assertRaises(OutOfDomain):
            section('tilde', tilde(1.0, 0.0))

    def test_halfplane_round_trip(self):
        self.assertAlmostEqual(section_inverse('halfplane', halfplane_section(0.3, 2.0)), 0.3 + 2.0j, places=14)
        point = section_inverse('tilde_halfplane', halfplane_section(0.3, 2.0))
        self.assertTrue(point.is_close(Vector11(2.0, 0.3)))


class ProjectionTests(SimpleTestCase):

    def test_identity(self):
        self.assertTrue(project('disk', GroupElement.identity()).is_close(GroupElement.identity('su11')))
        self.assertTrue(project('tilde', GroupElement.identity()).is_close(GroupElement.identity('cl11')))

    def test_disk_factorization(self):
        phase = np.exp(1j * np.pi / 4)
        g = section('disk', 0.3) @ GroupElement.su11(phase, 0.0)
        self.assertTrue(project('disk', g).is_close(GroupElement.su11(phase, 0.0)))
        self.assertAlmostEqual(section_inverse('disk', g), 0.3, places=14)

    def test_tilde_factorization(self):
        rotation_part = diagonal_even(exp_bivector(0.5))
        g = section('tilde', tilde(2.0, 0.0)) @ rotation_part
        self.assertTrue(project('tilde', g).is_close(rotation_part))
        point = section_inverse('tilde', g)
        self.assertTrue(point.is_close(tilde(2.0, 0.0)))

    def test_factorization_reassembles(self):
        rng = make_rng(9)
        for _ in range(50):
            g = random_unimodular(rng)
            for domain, image in (('disk', to_su11(g)), ('tilde', cayley(g))):
                rebuilt = section(domain, section_inverse(domain, image)) @ project(domain, image)
                self.assertTrue(rebuilt.is_close(image))

    def test_section_inverse_lands_in_disk(self):
        rng = make_rng(10)
        for _ in range(50):
            self.assertTrue(in_disk(section_inverse('tilde', cayley(random_unimodular(rng)))))

    def test_degenerate(self):
        with self.assertRaises(DegenerateElement):
            project('tilde', GroupElement.cl11(EvenNumber(1.0, 0.0), 0.0, 0.0, 1.0))


class ActionTests(SimpleTestCase):

    def test_identity(self):
        self.assertEqual(act('disk', GroupElement.identity(), 0.4 + 0.1j), 0.4 + 0.1j)
        self.assertTrue(act('tilde', GroupElement.identity(), tilde(0.3, 0.2)).is_close(tilde(0.3, 0.2)))

    def test_disk_rotation(self):
        psi = 0.4
        g = GroupElement.su11(np.exp(1j * psi), 0.0)
        self.assertAlmostEqual(act('disk', g, 0.5), np.exp(2j * psi) * 0.5, places=14)
        self.assertAlmostEqual(act_by_inverse('disk', g.inverse(), 0.5), np.exp(2j * psi) * 0.5, places=14)

    def test_tilde_bivector_rotation(self):
        tau, t = 0.3, 0.8
        g = diagonal_even(exp_bivector(tau))
        point = TildePoint(Sheet.PLUS, Vector11(math.cosh(t), -math.sinh(t)))
        expected = TildePoint(Sheet.PLUS, Vector11(math.cosh(t - 2 * tau), -math.sinh(t - 2 * tau)))
        self.assertTrue(act('tilde', g, point).is_close(expected))

    def test_halfplane(self):
        self.assertAlmostEqual(act('halfplane', G, 1j), 1.5 + 0.5j, places=14)
        with self.assertRaises(OutOfDomain):
            act('halfplane', G, -1j)

    def test_left_action_composition(self):
        rng = make_rng(13)
        for _ in range(30):
            g, h = random_unimodular(rng, scale=0.5), random_unimodular(rng, scale=0.5)
            z = 0.3 - 0.2j
            self.assertAlmostEqual(act('disk', g, act('disk', h, z)), act('disk', g @ h, z), places=10)
            point = tilde(0.2, -0.1, Sheet.MINUS)
            two_step = act('tilde', g, act('tilde', h, point))
            self.assertTrue(two_step.is_close(act('tilde', g @ h, point), atol=1e-9))

    def test_disk_preserved(self):
        rng = make_rng(17)
        for _ in range(50):
            point = act('tilde', random_unimodular(rng), tilde(0.1, 0.3, Sheet.MINUS))
            self.assertTrue(in_disk(point))

    def test_shift_and_dilation(self):
        point = tilde(0.5, 0.25)
        self.assertTrue(act('tilde', shift(Vector11(1.0, 2.0)), point).is_close(tilde(1.5, 2.25)))
        self.assertTrue(act('tilde', dilation(4.0), point).is_close(tilde(2.0, 1.0)))

    def test_rotation_matrix(self):
        a = exp_bivector(0.25).to_cliff()
        point = tilde(math.cosh(0.1), -math.sinh(0.1))
        expected = tilde(math.cosh(0.1 - 0.5), -math.sinh(0.1 - 0.5))
        self.assertTrue(act('tilde', rotation(a), point).is_close(expected))

    def test_kelvin_matrix(self):
        rng = make_rng(21)
        for _ in range(50):
            u = Vector11(*rng.uniform(-2.0, 2.0, size=2))
            if u.on_light_cone(1e-3):
                continue
            image = act('tilde', kelvin(), TildePoint(Sheet.PLUS, u))
            self.assertTrue(image.u.is_close(-kelvin_inverse(u), atol=1e-10))

    def test_sheet_flip_through_light_cone(self):
        image = act('tilde', kelvin(), tilde(0.0, 2.0))
        self.assertEqual(image.sheet, Sheet.MINUS)
        self.assertTrue(image.u.is_close(Vector11(0.0, -0.5)))
        self.assertEqual(act('tilde', kelvin(), tilde(2.0, 0.0)).sheet, Sheet.PLUS)

    def test_singular_denominator(self):
        with self.assertRaises(SingularDenominator):
            act('tilde', kelvin(), tilde(1.0, 1.0))

    def test_right_action_of_shift(self):
        g = GroupElement.real(1.0, 0.5, 0.0, 1.0)
        self.assertAlmostEqual(right_action('halfplane', g, 1.0 + 2.0j), 2.0 + 2.0j, places=14)

    def test_unknown_domain(self):
        with self.assertRaises(ValueError):
            act('sphere', G, 0.0)


class InvariantDensityTests(SimpleTestCase):

    def test_values(self):
        self.assertEqual(invariant_density('disk', 0.0), 1.0)
        self.assertAlmostEqual(invariant_density('disk', 0.6), 2.44140625, places=12)
        self.assertAlmostEqual(invariant_density('tilde', tilde(2.0, 0.0)), 1.0 / 9.0, places=15)

    def test_degenerate_locus(self):
        with self.assertRaises(OutOfDomain):
            invariant_density('disk', 1.0)
        with self.assertRaises(OutOfDomain):
            invariant_density('tilde', tilde(1.0, 0.0))

    def test_invariance(self):
        rng = make_rng(23)
        for _ in range(20):
            g = random_unimodular(rng, scale=0.3)
            z = 0.4 * np.exp(2j * np.pi * rng.uniform())
            ratio = (invariant_density('disk', act('disk', g, z)) * jacobian_determinant('disk', g, z)
                     / invariant_density('disk', z))
            self.assertAlmostEqual(ratio, 1.0, delta=1e-8)

        g = cayley(GroupElement.real(1.1, 0.2, 0.3, (1 + 0.2 * 0.3) / 1.1))
        point = tilde(0.3, 0.1, Sheet.MINUS)
        ratio = (invariant_density('tilde', act('tilde', g, point)) * jacobian_determinant('tilde', g, point)
                 / invariant_density('tilde', point))
        self.assertAlmostEqual(ratio, 1.0, delta=1e-8)


class GeometryTests(SimpleTestCase):

    def test_unit_circle_point(self):
        point = circle_point(-1.0, BranchCoord(0, 0.0))
        self.assertTrue(point.is_close(tilde(1.0, 0.0)))
        self.assertEqual(point.square(), -1.0)
        self.assertFalse(in_disk(point))

    def test_in_disk(self):
        self.assertTrue(in_disk(tilde(2.0, 0.0)))
        self.assertFalse(in_disk(tilde(0.5, 0.0)))
        self.assertTrue(in_disk(tilde(0.5, 0.0, Sheet.MINUS)))

    def test_concentric_circle(self):
        point = circle_point(-0.5, BranchCoord(0, 0.7))
        self.assertEqual(point.sheet, Sheet.PLUS)
        self.assertTrue(point.u.is_close(Vector11(0.5 * math.cosh(0.7), -0.5 * math.sinh(0.7))))
        self.assertAlmostEqual(point.square(), -0.25, places=14)
        minus = circle_point(-0.5, BranchCoord(3, 0.7))
        self.assertAlmostEqual(minus.square(), -4.0, places=13)

    def test_bad_radius(self):
        for lam in (0.0, -1.5, 0.3):
            with self.assertRaises(BadRadius):
                circle_point(lam, BranchCoord(0, 0.0))

    def test_bad_branch(self):
        with self.assertRaises(ValueError):
            BranchCoord(4, 0.0)

    def test_branch_of_round_trip(self):
        for branch in range(4):
            coord = BranchCoord(branch, -0.35)
            back = branch_of(circle_point(-1.0, coord))
            self.assertEqual(back.branch, branch)
            self.assertAlmostEqual(back.t, -0.35, places=13)

    def test_four_singular_points(self):
        roots = singular_points(tilde(2.0, 0.0))
        self.assertEqual(len(roots), 4)
        self.assertEqual(sorted(r.branch for r in roots), [1, 1, 3, 3])
        np.testing.assert_allclose(sorted(r.t for r in roots),
                                   [-math.log(2), -math.log(2), math.log(2), math.log(2)], atol=1e-15)

    def test_light_cone_factor_has_no_root(self):
        roots = singular_points(tilde(1.0, 1.0, Sheet.MINUS))
        self.assertEqual(len(roots), 2)

    def test_roots_move_continuously(self):
        base = singular_points(tilde(2.0, 0.0))
        moved = singular_points(tilde(2.0 + 1e-6, 1e-6))
        self.assertEqual([r.branch for r in base], [r.branch for r in moved])
        for a, b in zip(base, moved):
            self.assertLess(abs(a.t - b.t), 1e-5)

    def test_roots_are_zeros_of_denominator(self):
        u1, u2 = 2.0, 0.5
        for root in singular_points(tilde(u1, u2)):
            eps, t = root.sign, root.t
            first = math.exp(t) + eps * (u1 - u2)
            second = math.exp(-t) + eps * (u1 + u2)
            self.assertLess(min(abs(first), abs(second)), 1e-12)

    def test_singular_points_need_disk_point(self):
        with self.assertRaises(OutOfDomain):
            singular_points(tilde(1.0, 1.0))
        with self.assertRaises(OutOfDomain):
            singular_points(tilde(2.0, 0.0, Sheet.MINUS))


class MoebiusSuiteTests(SimpleTestCase):

    def test_suite_passes(self):
        results = checks.run(make_rng(42), samples=200)
        failed = [c['name'] for c in results if c['status'] == 'fail']
        self.assertEqual(failed, [])

    def test_measure_pairs_per_domain(self):
        results = {c['name']: c for c in checks.run(make_rng(3), samples=20)}
        self.assertEqual(results['measure_invariance_disk']['pairs'], 200)
        self.assertEqual(results['measure_invariance_tilde']['pairs'], 200)
        fewer = {c['name']: c for c in checks.run(make_rng(3), samples=20, measure_pairs=30)}
        self.assertEqual(fewer['measure_invariance_tilde']['pairs'], 30)
