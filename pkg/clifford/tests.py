import math

import numpy as np
from django.test import SimpleTestCase

from core.numerics import make_rng
from . import checks
from .algebra import (
    E1, E2, E12, P1, P2, ONE, Cliff11, EvenNumber, Vector11, even_calculus,
    exp_bivector, grade_part, involution, kelvin_inverse, mul,
)
from .exceptions import DomainError, LightConeError


class ProductTests(SimpleTestCase):
    """Geometric product under the Cl(1,1) relations"""

    def test_e1_squares_to_minus_one(self):
        self.assertEqual(mul(E1, E1), Cliff11(c0=-1.0))

    def test_e2_squares_to_one(self):
        self.assertEqual(mul(E2, E2), Cliff11(c0=1.0))

    def test_generators_anticommute(self):
        self.assertEqual(mul(E1, E2), -mul(E2, E1))
        self.assertEqual(mul(E1, E2), E12)

    def test_identity(self):
        x = Cliff11(1.0, -2.0, 3.0, 4.0)
        self.assertEqual(mul(Cliff11.scalar(1.0), x), x)
        self.assertEqual(mul(x, Cliff11.scalar(1.0)), x)

    def test_vector_square_is_scalar(self):
        x = E1 + 2 * E2
        self.assertEqual(mul(x, x), Cliff11(c0=3.0))

    def test_bivector_relations(self):
        self.assertEqual(mul(E12, E12), Cliff11(c0=1.0))
        self.assertEqual(mul(E12, E1), E2)
        self.assertEqual(mul(E1, E12), -E2)

    def test_associativity_on_integers(self):
        rng = make_rng(7)
        for _ in range(200):
            x, y, z = (Cliff11(*rng.integers(-5, 6, size=4).astype(float)) for _ in range(3))
            self.assertEqual(mul(mul(x, y), z), mul(x, mul(y, z)))

    def test_even_part_closed(self):
        x = Cliff11(c0=2.0, c12=-1.0)
        y = Cliff11(c0=-3.0, c12=5.0)
        product = mul(x, y)
        self.assertEqual((product.c1, product.c2), (0.0, 0.0))

    def test_inverse(self):
        x = Cliff11(2.0, 1.0, 0.5, 0.25)
        self.assertTrue(mul(x, x.inverse()).is_close(1.0))
        self.assertTrue(mul(x.inverse(), x).is_close(1.0))

    def test_zero_divisor_has_no_inverse(self):
        with self.assertRaises(DomainError):
            P1.to_cliff().inverse()


class InvolutionTests(SimpleTestCase):

    def test_conjugation_of_bivector(self):
        self.assertEqual(involution('conjugation', E12), -E12)

    def test_reversion_of_scalar(self):
        self.assertEqual(involution('reversion', Cliff11.scalar(3.0)), Cliff11.scalar(3.0))

    def test_grade_involution(self):
        self.assertEqual(involution('grade', E1 + 3.0), -E1 + 3.0)

    def test_vectors(self):
        x = Cliff11(c1=2.0, c2=-1.0)
        self.assertEqual(x.conjugation(), -x)
        self.assertEqual(x.grade_involution(), -x)
        self.assertEqual(x.reversion(), x)

    def test_anti_automorphisms(self):
        rng = make_rng(11)
        for _ in range(200):
            x, y = (Cliff11(*rng.integers(-4, 5, size=4).astype(float)) for _ in range(2))
            self.assertEqual(mul(x, y).reversion(), mul(y.reversion(), x.reversion()))
            self.assertEqual(mul(x, y).conjugation(), mul(y.conjugation(), x.conjugation()))
            self.assertEqual(mul(x, y).grade_involution(), mul(x.grade_involution(), y.grade_involution()))

    def test_scalar_norm(self):
        x = Cliff11(1.0, 2.0, 3.0, 4.0)
        self.assertEqual(mul(x, x.conjugation()), Cliff11(c0=x.scalar_norm()))

    def test_grade_part(self):
        x = Cliff11(1.0, 2.0, 3.0, 4.0)
        self.assertEqual(grade_part(x, 1), Cliff11(c1=2.0, c2=3.0))
        with self.assertRaises(ValueError):
            grade_part(x, 3)


class KelvinInverseTests(SimpleTestCase):

    def test_e1(self):
        self.assertEqual(kelvin_inverse(Vector11(1.0, 0.0)), Vector11(-1.0, 0.0))

    def test_multiply_back(self):
        x = Vector11(1.0, 2.0)
        inverse = kelvin_inverse(x)
        self.assertTrue(inverse.is_close(Vector11(1.0 / 3.0, 2.0 / 3.0)))
        self.assertTrue(mul(x, inverse).is_close(1.0, atol=1e-15))

    def test_light_cone(self):
        with self.assertRaises(LightConeError):
            kelvin_inverse(Vector11(1.0, 1.0))

    def test_relative_tolerance(self):
        with self.assertRaises(LightConeError):
            kelvin_inverse(Vector11(1e8, 1e8 * (1 + 1e-15)))
        kelvin_inverse(Vector11(1e-8, 2e-8))


class EvenNumberTests(SimpleTestCase):

    def test_idempotents(self):
        self.assertEqual(P1 * P2, EvenNumber(0.0, 0.0))
        self.assertEqual(P1 * P1, P1)
        self.assertEqual(P2 * P2, P2)
        self.assertEqual(P1 + P2, ONE)

    def test_idempotents_in_cliff_basis(self):
        p1 = (Cliff11.scalar(1.0) + E12) * 0.5
        p2 = (Cliff11.scalar(1.0) - E12) * 0.5
        self.assertEqual(mul(p1, p2), Cliff11())
        self.assertEqual(mul(p1, p1), p1)
        self.assertEqual(P1.to_cliff(), p1)

    def test_componentwise_product_matches_cliff_product(self):
        a = EvenNumber(2.0, -3.0)
        b = EvenNumber(0.5, 4.0)
        self.assertEqual(mul(a, b).even, a * b)

    def test_conjugate_swaps_components(self):
        a = EvenNumber(2.0, 3.0)
        self.assertEqual(a.conjugate(), EvenNumber(3.0, 2.0))
        self.assertEqual(a.conjugate().to_cliff(), a.to_cliff().conjugation())

    def test_square_calculus(self):
        a = 2 * P1 + 3 * P2
        self.assertEqual(even_calculus(lambda x: x ** 2, a), EvenNumber(4.0, 9.0))
        self.assertEqual(even_calculus(lambda x: x ** 2, a), a * a)

    def test_identity_calculus(self):
        a = EvenNumber(-1.5, 7.0)
        self.assertEqual(even_calculus(lambda x: x, a), a)

    def test_log_calculus(self):
        result = even_calculus(np.log, EvenNumber(2.0, 3.0))
        self.assertAlmostEqual(result.a1, math.log(2.0), places=15)
        self.assertAlmostEqual(result.a2, math.log(3.0), places=15)

    def test_log_outside_domain(self):
        with self.assertRaises(DomainError):
            even_calculus(np.log, EvenNumber(2.0, -3.0))
        with self.assertRaises(DomainError):
            even_calculus(math.log, EvenNumber(0.0, 1.0))

    def test_polynomial_calculus(self):
        a = EvenNumber(0.5, -1.5)
        coefficients = [1.0, -2.0, 0.25, 3.0, 0.0, -0.5, 1.0, 0.75, 2.0]
        direct = EvenNumber(0.0, 0.0)
        for c in reversed(coefficients):
            direct = mul(direct, a).even + c
        calculus = even_calculus(lambda v: np.polynomial.polynomial.polyval(v, coefficients), a)
        self.assertTrue(calculus.is_close(direct, atol=1e-12))

    def test_fractional_power(self):
        self.assertTrue(EvenNumber(4.0, 9.0).power(0.5).is_close(EvenNumber(2.0, 3.0)))
        with self.assertRaises(DomainError):
            EvenNumber(4.0, -9.0).power(0.5)

    def test_integer_power_of_negative_component(self):
        self.assertEqual(EvenNumber(-2.0, 3.0).power(3), EvenNumber(-8.0, 27.0))
        self.assertTrue(EvenNumber(-2.0, 4.0).power(-1).is_close(EvenNumber(-0.5, 0.25)))

    def test_norms(self):
        a = EvenNumber(3.0, 1.0)
        self.assertEqual(a.scalar_norm(), 3.0)
        self.assertEqual(a.norm_sq(), a.c0 ** 2 + a.c12 ** 2)

    def test_array_components(self):
        a = EvenNumber(np.array([1.0, 2.0]), np.array([3.0, 4.0]))
        product = a * a
        np.testing.assert_array_equal(product.a1, [1.0, 4.0])
        np.testing.assert_array_equal((2.0 * a).a2, [6.0, 8.0])


class ExpBivectorTests(SimpleTestCase):

    def test_zero(self):
        self.assertEqual(exp_bivector(0.0), ONE)

    def test_log_two(self):
        value = exp_bivector(math.log(2.0))
        self.assertAlmostEqual(value.c0, 1.25, places=15)
        self.assertAlmostEqual(value.c12, 0.75, places=15)

    def test_group_law(self):
        self.assertTrue((exp_bivector(0.3) * exp_bivector(0.4)).is_close(exp_bivector(0.7), atol=1e-15))

    def test_unit_norm(self):
        self.assertAlmostEqual(exp_bivector(1.7).scalar_norm(), 1.0, places=14)


class CliffordSuiteTests(SimpleTestCase):

    def test_suite_passes(self):
        results = checks.run(make_rng(42))
        failed = [c['name'] for c in results if c['status'] == 'fail']
        self.assertEqual(failed, [])
