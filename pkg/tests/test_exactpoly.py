import unittest

import ddt
import numpy as np

import dotdot
from cubicatlas import dynamics, exactpoly
from cubicatlas.exactpoly import BivariatePolynomial, UnivariatePolynomial
from cubicatlas.errors import DegreeBudgetError, DivisibilityError, DomainError


a = BivariatePolynomial.variable('a')
v = BivariatePolynomial.variable('v')

Q2 = v ** 3 + (1 - 3 * a * a) * v + (2 * a ** 3 - a)
PHI2 = v * v + a * v + (1 - 2 * a * a)


class TestBivariatePolynomial(unittest.TestCase):

    def test_no_zero_coefficient_stored(self):
        p = BivariatePolynomial({(1, 0): 1, (0, 1): 0})
        self.assertEqual(p.terms, {(1, 0): 1})
        self.assertTrue((a - a).is_zero)

    def test_degrees(self):
        self.assertEqual(Q2.degree_v, 3)
        self.assertEqual(Q2.degree_a, 3)
        self.assertEqual(Q2.degree, 3)
        self.assertEqual(BivariatePolynomial().degree, -1)

    def test_negative_exponent(self):
        with self.assertRaises(DomainError):
            BivariatePolynomial({(-1, 0): 1})

    def test_unknown_variable(self):
        with self.assertRaises(DomainError):
            BivariatePolynomial.variable('z')

    def test_power_matches_product(self):
        p = a * v + 3 * v - 2
        self.assertEqual(p ** 4, p * p * p * p)
        self.assertEqual(p ** 0, BivariatePolynomial.constant(1))

    def test_large_product_is_exact(self):
        p = (a + v + 7) ** 12
        q = (a - 2 * v + 5) ** 11
        expected = BivariatePolynomial.constant(1)
        for factor in [a + v + 7] * 12 + [a - 2 * v + 5] * 11:
            expected = expected * factor
        self.assertEqual(p * q, expected)

    def test_evaluate(self):
        self.assertEqual(exactpoly.evaluate(v - a, 1, 1), 0)
        self.assertEqual(exactpoly.evaluate(PHI2, 0, 1j), 0)
        self.assertEqual(exactpoly.evaluate(BivariatePolynomial(), 3, 5), 0)

    def test_partial(self):
        self.assertEqual(exactpoly.partial_derivative(v - a, 'v'), BivariatePolynomial.constant(1))
        self.assertEqual(exactpoly.partial_derivative(PHI2, 'a'), v - 4 * a)
        self.assertTrue(exactpoly.partial_derivative(BivariatePolynomial.constant(5), 'v').is_zero)

    def test_divmod(self):
        quotient, remainder = Q2.divmod_v(v - a)
        self.assertEqual(quotient, PHI2)
        self.assertTrue(remainder.is_zero)

    def test_inexact_division(self):
        with self.assertRaises(DivisibilityError):
            (v * v + 1).exact_div_v(v - a)

    def test_repr(self):
        self.assertEqual(repr(v - a), 'v - a')


@ddt.ddt
class TestInvolutionSign(unittest.TestCase):

    def test_q1(self):
        self.assertEqual(exactpoly.involution_symmetry_sign(v - a), -1)

    def test_phi2(self):
        self.assertEqual(exactpoly.involution_symmetry_sign(PHI2), 1)

    def test_mixed(self):
        self.assertIsNone(exactpoly.involution_symmetry_sign(v * v + v))

    def test_zero(self):
        with self.assertRaises(DomainError):
            exactpoly.involution_symmetry_sign(BivariatePolynomial())

    @ddt.data(1, 2, 3, 4, 5, 6)
    def test_phin_has_a_sign(self, n):
        phin = exactpoly.build_Phin(n)
        sign = exactpoly.involution_symmetry_sign(phin)
        self.assertIn(sign, (-1, 1))
        self.assertEqual(phin.involution(), phin if sign == 1 else -phin)


@ddt.ddt
class TestDynatomic(unittest.TestCase):

    def test_q1(self):
        self.assertEqual(exactpoly.build_Qn(1), v - a)

    def test_q2(self):
        self.assertEqual(exactpoly.build_Qn(2), Q2)

    @ddt.data(1, 2, 3, 4)
    def test_q_degree(self, n):
        self.assertEqual(exactpoly.build_Qn(n).degree_v, 3 ** (n - 1))

    def test_phi1(self):
        self.assertEqual(exactpoly.build_Phin(1), v - a)

    def test_phi2(self):
        self.assertEqual(exactpoly.build_Phin(2), PHI2)

    @ddt.data((1, 1), (2, 2), (3, 8), (4, 24), (5, 80), (6, 232))
    @ddt.unpack
    def test_phin_degree(self, n, degree):
        self.assertEqual(exactpoly.phin_degree_v(n), degree)

    def test_phi4_degree(self):
        self.assertEqual(exactpoly.build_Phin(4).degree_v, 24)

    def test_product_of_factors(self):
        product = exactpoly.build_Phin(1) * exactpoly.build_Phin(2) * exactpoly.build_Phin(4)
        self.assertEqual(product, exactpoly.build_Qn(4))

    @ddt.data(2, 3, 4, 5, 6)
    def test_product_over_divisors(self, n):
        product = BivariatePolynomial.constant(1)
        for d in exactpoly.divisors(n):
            product = product * exactpoly.build_Phin(d)
        self.assertEqual(product, exactpoly.build_Qn(n))

    def test_q3_roots_are_periodic(self):
        point = 0.4 + 0.2j
        numeric = exactpoly.NumericPolynomial(exactpoly.build_Qn(3))
        roots = np.polynomial.polynomial.polyroots(numeric.fiber_coefficients(point))
        self.assertEqual(len(roots), 9)
        for root in roots:
            f = dynamics.CubicMap(point, root)
            self.assertAlmostEqual(abs(f(f(f(point))) - point), 0, delta=1e-8)

    def test_budget(self):
        with self.assertRaises(DegreeBudgetError) as cm:
            exactpoly.build_Qn(9)
        self.assertEqual(cm.exception.exit_code, 2)

    def test_configurable_budget(self):
        with self.assertRaises(DegreeBudgetError):
            exactpoly.build_Phin(3, max_period=2)

    def test_nonpositive_period(self):
        with self.assertRaises(DomainError):
            exactpoly.build_Qn(0)

    @ddt.data((1, 1), (4, 0), (6, 1), (5, -1), (30, -1))
    @ddt.unpack
    def test_mobius(self, n, value):
        self.assertEqual(exactpoly.mobius(n), value)


class TestResultant(unittest.TestCase):

    def test_linear(self):
        self.assertEqual(exactpoly.resultant_v(v - a, v + a), UnivariatePolynomial([0, 2]))

    def test_self_resultant(self):
        self.assertTrue(exactpoly.resultant_v(PHI2, PHI2).is_zero)

    def test_swapping_arguments(self):
        # degrees 1 and 3 in v: Res(q, p) = -Res(p, q)
        self.assertEqual(exactpoly.resultant_v(Q2, v - a), -exactpoly.resultant_v(v - a, Q2))
        self.assertEqual(exactpoly.resultant_v(Q2, PHI2), exactpoly.resultant_v(PHI2, Q2))

    def test_product_over_roots(self):
        resultant = exactpoly.resultant_v(PHI2, Q2)
        for point in (0.7, -1.3 + 0.4j):
            roots = np.roots([1, point, 1 - 2 * point * point])
            expected = np.prod([Q2.evaluate(point, r) for r in roots])
            self.assertAlmostEqual(abs(resultant(point) - expected), 0,
                                   delta=1e-9 * (1 + abs(expected)))

    def test_sylvester_determinant(self):
        point = 2
        p = [row(point) for row in PHI2.coefficients_in_v()][::-1]
        q = [row(point) for row in Q2.coefficients_in_v()][::-1]
        m, n = len(p) - 1, len(q) - 1
        sylvester = np.zeros((m + n, m + n))
        for i in range(n):
            sylvester[i, i:i + m + 1] = p
        for i in range(m):
            sylvester[n + i, i:i + n + 1] = q
        resultant = exactpoly.resultant_v(PHI2, Q2)
        self.assertAlmostEqual(np.linalg.det(sylvester), resultant(point),
                               delta=1e-9 * (1 + abs(resultant(point))))

    def test_constant_in_v(self):
        with self.assertRaises(DomainError):
            exactpoly.resultant_v(a + 1, a - 1)

    def test_discriminant_phi2(self):
        disc = exactpoly.discriminant_v(PHI2)
        self.assertEqual(disc.primitive_part(), UnivariatePolynomial([-4, 0, 9]))

    def test_repeated_root_count(self):
        square = UnivariatePolynomial([1, -1]) * UnivariatePolynomial([1, -1])
        self.assertEqual((square * UnivariatePolynomial([2, 1])).repeated_root_count(), 1)
        self.assertEqual(UnivariatePolynomial([-4, 0, 9]).repeated_root_count(), 0)
        self.assertEqual(exactpoly.discriminant_v(PHI2).repeated_root_count(), 0)
        self.assertEqual(UnivariatePolynomial.constant(5).repeated_root_count(), 0)

    def test_repeated_root_count_bad_primes(self):
        lead = exactpoly.MODULAR_PRIMES[0] * exactpoly.MODULAR_PRIMES[1]
        self.assertIsNone(UnivariatePolynomial([1, 0, lead]).repeated_root_count())

    def test_squarefree_part(self):
        cube = UnivariatePolynomial([-1, 1]) * UnivariatePolynomial([-1, 1]) * \
            UnivariatePolynomial([-1, 1])
        self.assertEqual((cube * UnivariatePolynomial([3, 2])).squarefree_part(),
                         UnivariatePolynomial([-3, 1, 2]))

    def test_discriminant_phi1_is_constant(self):
        self.assertEqual(exactpoly.discriminant_v(v - a).degree, 0)

    def test_discriminant_phi3_has_roots(self):
        disc = exactpoly.discriminant_v(exactpoly.build_Phin(3))
        self.assertGreater(disc.degree, 0)


class TestNumericPolynomial(unittest.TestCase):

    def test_fiber_coefficients(self):
        numeric = exactpoly.NumericPolynomial(PHI2)
        self.assertEqual(list(numeric.fiber_coefficients(1.0)), [-1.0, 1.0, 1.0])

    def test_residual_on_curve(self):
        numeric = exactpoly.NumericPolynomial(PHI2)
        root = (-1 + 5 ** 0.5) / 2
        self.assertLess(numeric.normalized_residual(1.0, root), 1e-15)

    def test_gradient_is_positive(self):
        numeric = exactpoly.NumericPolynomial(PHI2)
        self.assertGreater(numeric.gradient_norm(1.0, (-1 + 5 ** 0.5) / 2), 0.1)


if __name__ == '__main__':
    unittest.main()
