import cmath
import math
import unittest

import ddt
import numpy as np

import dotdot
from cubicatlas import dynamics
from cubicatlas.dynamics import CubicMap, EscapeClass
from cubicatlas.errors import (AmbiguousPeriod, BranchError, DomainError, OrbitOverflow,
                               UndeterminedOrbit)


GOLDEN = (-1 + 5 ** 0.5) / 2  # root of v^2 + v - 1, so Phi_2(1, v) = 0


@ddt.ddt
class TestCubicMap(unittest.TestCase):

    def test_critical_value(self):
        f = CubicMap(0.3 + 0.2j, -1.1j)
        self.assertAlmostEqual(f(f.a), f.v, places=14)

    def test_cocritical_points(self):
        f = CubicMap(1.3 - 0.4j, 0.7)
        minus, plus = f.cocritical_points
        self.assertAlmostEqual(f(minus), f(f.a), places=12)
        self.assertAlmostEqual(f(plus), f(-f.a), places=12)

    def test_derivative_vanishes_at_critical_points(self):
        f = CubicMap(2, 5)
        for c in f.critical_points:
            self.assertEqual(f.derivative(c), 0)

    def test_involution_conjugates(self):
        f = CubicMap(0.5 + 1j, 2 - 1j)
        g = f.involution()
        z = 0.3 - 0.8j
        self.assertAlmostEqual(g(-z), -f(z), places=12)


class TestOrbit(unittest.TestCase):

    def test_z_cubed(self):
        self.assertEqual(dynamics.orbit(CubicMap(0, 0), 0, 3), [0, 0, 0, 0])

    def test_first_step_from_a(self):
        f = CubicMap(0.4, 1.5j)
        self.assertEqual(dynamics.orbit(f, f.a, 1), [f.a, f.v])

    def test_from_cocritical(self):
        a, v = 0.5, 0.25
        orbit = dynamics.orbit(CubicMap(a, v), 2 * a, 1)
        self.assertAlmostEqual(orbit[1], 4 * a ** 3 + v, places=14)

    def test_overflow(self):
        with self.assertRaises(OrbitOverflow):
            dynamics.orbit(CubicMap(0, 0), 1e60, 5)

    def test_negative_length(self):
        with self.assertRaises(DomainError):
            dynamics.orbit(CubicMap(0, 0), 0, -1)


@ddt.ddt
class TestGreen(unittest.TestCase):

    @ddt.data(10, 10j, -10, 1e3)
    def test_z_cubed(self, z):
        g = dynamics.green(CubicMap(0, 0), z)
        self.assertAlmostEqual(g.value, math.log(abs(z)), delta=1e-11)
        self.assertTrue(g.escaped)

    def test_bounded(self):
        g = dynamics.green(CubicMap(0, 0), 0.5)
        self.assertEqual(g.escape_class, EscapeClass.BOUNDED)
        self.assertEqual(g.value, 0.0)

    def test_asymptotics(self):
        f = CubicMap(1 + 1j, 2)
        for r in (1e3, 1e6):
            g = dynamics.green(f, r)
            self.assertLess(abs(g.value - math.log(r)), 10 * abs(f.a) ** 2 / r ** 2 + 1e-11)

    def test_functional_equation(self):
        f = CubicMap(1.5, 3 + 1j)
        z = 2 - 1j
        self.assertAlmostEqual(dynamics.green(f, f(z)).value,
                               3 * dynamics.green(f, z).value, delta=1e-9)

    def test_bad_tolerance(self):
        with self.assertRaises(DomainError):
            dynamics.green(CubicMap(0, 0), 2, tol=0)


def random_maps(count, seed=0, scale=1.5):
    rng = np.random.RandomState(seed)
    values = scale * (rng.uniform(-1, 1, (count, 2)) + 1j * rng.uniform(-1, 1, (count, 2)))
    return [CubicMap(a, v) for a, v in values], rng


class TestGreenInvariants(unittest.TestCase):

    def test_functional_equation_many_points(self):
        maps, rng = random_maps(50, seed=3)
        for f in maps:
            points = 3 * rng.uniform(0, 1, 20) * np.exp(2j * math.pi * rng.uniform(0, 1, 20))
            for z in points:
                g = dynamics.green(f, z, budget=2000)
                image = dynamics.green(f, f(z), budget=2000)
                allowed = image.error_bound + 3 * g.error_bound + 1e-12 * (1 + image.value)
                self.assertLessEqual(abs(image.value - 3 * g.value), allowed)

    def test_cocritical_points_share_the_critical_value(self):
        maps, _ = random_maps(50, seed=4)
        for f in maps:
            g_plus = dynamics.green(f, 2 * f.a, budget=2000)
            g_minus = dynamics.green(f, -f.a, budget=2000)
            self.assertAlmostEqual(g_plus.value, g_minus.value, delta=1e-10)

    def test_bottcher_modulus(self):
        maps, rng = random_maps(50, seed=5)
        for f in maps:
            z = 3 * f.escape_radius * cmath.exp(2j * math.pi * rng.uniform())
            phi = dynamics.bottcher(f, z)
            g = dynamics.green(f, z)
            self.assertAlmostEqual(math.log(abs(phi)), g.value, delta=1e-10)

    def test_refinement(self):
        f = CubicMap(0.8 + 0.3j, 1.2 - 0.5j)
        z = 2.5 + 0.5j
        exact = dynamics.green(f, z, tol=1e-15).value
        previous = None
        for tol in (1e-3, 1e-6, 1e-9, 1e-12):
            g = dynamics.green(f, z, tol=tol)
            self.assertLessEqual(abs(g.value - exact), g.error_bound + 1e-14)
            self.assertLessEqual(g.error_bound, tol)
            if previous is not None:
                self.assertGreaterEqual(g.iterations_used, previous.iterations_used)
                self.assertLessEqual(g.error_bound, previous.error_bound)
            previous = g


class TestCriticalOrbitJet(unittest.TestCase):

    def test_first_step(self):
        v = np.array([0.5, 1j, -2])
        q, q_v, q_a = dynamics.critical_orbit_jet(0.7, v, [1])[1]
        np.testing.assert_allclose(q, v - 0.7, atol=1e-15)
        np.testing.assert_allclose(q_v, 1)
        np.testing.assert_allclose(q_a, -1)

    def test_derivatives_match_differences(self):
        a, v, h = 0.4 + 0.3j, np.array([0.2 - 0.1j]), 1e-6
        q, q_v, q_a = dynamics.critical_orbit_jet(a, v, [3])[3]

        def q3(a, v):
            return dynamics.critical_orbit_jet(a, v, [3])[3][0]

        np.testing.assert_allclose(q_v, (q3(a, v + h) - q3(a, v - h)) / (2 * h), rtol=1e-6)
        np.testing.assert_allclose(q_a, (q3(a + h, v) - q3(a - h, v)) / (2 * h), rtol=1e-6)

    def test_newton_step_period_two(self):
        # Phi_2(1, v) is proportional to v^2 + v - 1
        step = dynamics.exact_period_newton_step(1, np.array([0.6]), 2)[0]
        self.assertAlmostEqual(step, (0.36 + 0.6 - 1) / 2.2, places=12)

    def test_slope(self):
        self.assertAlmostEqual(dynamics.parameter_slope(0.3, np.array([0.3]), 1)[0], 1)
        h = 1e-5
        ahead = dynamics.refine_parameter(1 + h, GOLDEN, 2)
        behind = dynamics.refine_parameter(1 - h, GOLDEN, 2)
        slope = dynamics.parameter_slope(1, np.array([GOLDEN]), 2)[0]
        self.assertAlmostEqual(slope, (ahead - behind) / (2 * h), delta=1e-6)

    def test_refine_avoids_smaller_period(self):
        # Phi_2(0, v) = v^2 + 1, while v = 0 has period one
        self.assertAlmostEqual(dynamics.refine_parameter(0, 0.01 + 0.01j, 2), 1j, places=12)


class TestClassifyEscape(unittest.TestCase):

    def test_z_cubed_bounded(self):
        self.assertEqual(dynamics.classify_escape(CubicMap(0, 0)), EscapeClass.BOUNDED)

    def test_large_a_escapes(self):
        # a point of Phi_2 = 0 over a = 10
        a = 10.0
        v = (-a + cmath.sqrt(9 * a * a - 4)) / 2
        self.assertEqual(dynamics.classify_escape(CubicMap(a, v)), EscapeClass.ESCAPE_LOCUS)

    def test_slow_orbit_undetermined(self):
        # one iteration moves -a from 1e-3 to about 1, still inside the escape radius
        f = CubicMap(1e-3, 1.0)
        self.assertEqual(dynamics.classify_escape(f, budget=1), EscapeClass.UNDETERMINED)


@ddt.ddt
class TestExactPeriod(unittest.TestCase):

    def test_fixed(self):
        self.assertEqual(dynamics.exact_period(CubicMap(0, 0), 5), 1)

    def test_period_two(self):
        self.assertEqual(dynamics.exact_period(CubicMap(1, GOLDEN), 5, tol=1e-10), 2)

    def test_period_two_polished(self):
        v = dynamics.refine_parameter(1, 0.6, 2)
        self.assertAlmostEqual(v, GOLDEN, places=12)
        self.assertEqual(dynamics.exact_period(CubicMap(1, v), 5), 2)

    def test_generic(self):
        self.assertIsNone(dynamics.exact_period(CubicMap(0.37 + 0.11j, 0.52 - 0.2j), 6))

    def test_ambiguous(self):
        f = CubicMap(0, 5e-12)
        with self.assertRaises(AmbiguousPeriod):
            dynamics.exact_period(f, 1, tol=1e-12)

    def test_bad_nmax(self):
        with self.assertRaises(DomainError):
            dynamics.exact_period(CubicMap(0, 0), 0)


class TestBottcher(unittest.TestCase):

    def test_identity_for_z_cubed(self):
        self.assertAlmostEqual(dynamics.bottcher(CubicMap(0, 0), 10), 10, places=12)

    def test_conjugacy(self):
        f = CubicMap(0.5, 1 + 0.5j)
        z = 30 + 10j
        phi = dynamics.bottcher(f, z)
        self.assertLess(abs(dynamics.bottcher(f, f(z)) - phi ** 3), 1e-9 * abs(phi) ** 3)

    def test_inside_escape_radius(self):
        with self.assertRaises(BranchError):
            dynamics.bottcher(CubicMap(0, 0), 1)


class TestGreenGrid(unittest.TestCase):

    def test_matches_green(self):
        f = CubicMap(1 + 0.5j, 2)
        points = np.array([3 + 1j, -2.5, 4j])
        threshold = 0.5
        values = dynamics.green_grid(f, points, threshold)
        for z, value in zip(points, values):
            self.assertAlmostEqual(value, dynamics.green(f, z).value, delta=1e-3 * threshold)

    def test_bounded_points(self):
        values = dynamics.green_grid(CubicMap(0, 0), [0, 0.5], 0.1)
        self.assertTrue(np.all(values < 1e-4))


if __name__ == '__main__':
    unittest.main()
