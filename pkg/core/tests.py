import math

import numpy as np
from django.test import SimpleTestCase, override_settings

from .checks import logged, record
from .conf import DEFAULTS, r11_setting
from .exceptions import R11Error
from .numerics import (central_difference, gauss_legendre, graded_breaks, make_rng, observed_order, panel_rule,
                       richardson_table, second_difference, smooth_bump, uniform_breaks)


class GaussLegendreTests(SimpleTestCase):

    def test_polynomial_exactness(self):
        x, w = gauss_legendre(5)
        self.assertAlmostEqual(np.sum(w), 2.0, places=14)
        # exact up to degree 9
        self.assertAlmostEqual(np.sum(w * x ** 8), 2.0 / 9.0, places=14)

    def test_read_only_cache(self):
        x, _ = gauss_legendre(4)
        self.assertIs(gauss_legendre(4)[0], x)
        with self.assertRaises(ValueError):
            x[0] = 0.0

    def test_panel_rule(self):
        nodes, weights = panel_rule(uniform_breaks(0.0, math.pi, 0.5), 8)
        self.assertAlmostEqual(np.sum(weights * np.sin(nodes)), 2.0, places=13)
        self.assertTrue(np.all(np.diff(nodes) > 0))


class BreakpointTests(SimpleTestCase):

    def test_uniform(self):
        breaks = uniform_breaks(0.0, 1.0, 0.3)
        np.testing.assert_allclose(breaks, np.linspace(0.0, 1.0, 5))

    def test_graded_both_directions(self):
        right = graded_breaks(1.0, 5.0, 0.01, 0.5)
        self.assertAlmostEqual(right[0], 1.0)
        self.assertAlmostEqual(right[-1], 5.0)
        self.assertAlmostEqual(right[1] - right[0], 0.01)
        left = graded_breaks(1.0, -3.0, 0.01, 0.5)
        self.assertAlmostEqual(left[-1], 1.0)
        self.assertAlmostEqual(left[-1] - left[-2], 0.01)
        self.assertLessEqual(np.max(np.diff(left)), 0.5 + 1e-12)


class DifferenceTests(SimpleTestCase):

    def test_complex_function(self):
        derivative = central_difference(lambda z: z ** 3, 0.5 + 0.5j, 1e-4)
        self.assertAlmostEqual(abs(derivative - 3 * (0.5 + 0.5j) ** 2), 0.0, places=7)

    def test_second_difference(self):
        self.assertAlmostEqual(second_difference(np.exp, 0.0, 1e-3), 1.0, places=6)

    def test_richardson_and_order(self):
        h = 0.1 * 2.0 ** -np.arange(5)
        values = [float(central_difference(np.sin, 1.0, step)) for step in h]
        table = richardson_table(values, orders=(2,))
        self.assertLess(abs(table[-1][-1] - math.cos(1.0)), 1e-10)
        self.assertAlmostEqual(observed_order(np.abs(np.array(values) - math.cos(1.0))), 2.0, delta=0.05)

    def test_order_needs_two_errors(self):
        self.assertEqual(observed_order([1e-3, 0.0, 0.0]), 0.0)


class ProfileTests(SimpleTestCase):

    def test_smooth_bump(self):
        values = smooth_bump([-1.0, 0.0, 0.5, 1.0, 2.0])
        self.assertEqual(values[0], 0.0)
        self.assertAlmostEqual(values[1], math.exp(-1.0), places=15)
        self.assertAlmostEqual(values[2], math.exp(-1.0 / 0.75), places=15)
        self.assertEqual(values[3], 0.0)
        self.assertEqual(values[4], 0.0)

    def test_seeded(self):
        np.testing.assert_array_equal(make_rng(9).normal(size=4), make_rng(9).normal(size=4))


class CheckRecordTests(SimpleTestCase):

    def test_pass_and_fail(self):
        self.assertEqual(record('a', 1e-13, 1e-12, points=3),
                         {'name': 'a', 'error': 1e-13, 'tolerance': 1e-12, 'status': 'pass', 'points': 3})
        self.assertEqual(record('b', 1e-3, 1e-12)['status'], 'fail')
        self.assertEqual(record('c', float('nan'), 1.0)['status'], 'fail')

    def test_logged(self):
        self.assertEqual(logged('ratio', 0.5, n=2), {'name': 'ratio', 'value': 0.5, 'status': 'logged', 'n': 2})


class SettingsTests(SimpleTestCase):

    def test_default(self):
        with override_settings(R11_SETTINGS={}):
            self.assertEqual(r11_setting('GAUSS_ORDER'), DEFAULTS['GAUSS_ORDER'])

    def test_override(self):
        with override_settings(R11_SETTINGS={'THREADS': 9}):
            self.assertEqual(r11_setting('THREADS'), 9)


class ExceptionTests(SimpleTestCase):

    def test_context_in_message(self):
        error = R11Error("Bad point", u1=0.5)
        self.assertEqual(str(error), "Bad point (u1=0.5)")
        self.assertEqual(error.context, {'u1': 0.5})
        self.assertEqual(str(R11Error("Plain")), "Plain")
