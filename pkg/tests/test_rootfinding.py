import unittest

import numpy as np

import dotdot
from cubicatlas import rootfinding
from cubicatlas.errors import RootFindingError


def sorted_roots(roots):
    return sorted(np.asarray(roots), key=lambda z: (round(z.real, 8), round(z.imag, 8)))


class TestPolynomialRoots(unittest.TestCase):

    def test_quadratic(self):
        roots = sorted_roots(rootfinding.polynomial_roots([-4, 0, 9]))
        np.testing.assert_allclose(roots, [-2 / 3, 2 / 3], atol=1e-14)

    def test_zeros_at_origin_are_kept(self):
        roots = rootfinding.polynomial_roots([0, 0, -1, 1])
        self.assertEqual(sorted(abs(r) for r in roots)[:2], [0, 0])
        self.assertEqual(len(roots), 3)

    def test_zero_polynomial(self):
        with self.assertRaises(RootFindingError):
            rootfinding.polynomial_roots([0, 0])

    def test_aberth_roots_of_unity(self):
        degree = 90
        coefficients = np.zeros(degree + 1, dtype=complex)
        coefficients[0], coefficients[-1] = -1, 1
        roots = rootfinding.polynomial_roots(coefficients)
        self.assertEqual(len(roots), degree)
        np.testing.assert_allclose(np.abs(roots), 1.0, atol=1e-12)
        self.assertLess(np.max(rootfinding.normalized_residual(coefficients, roots)), 1e-13)

    def test_aberth_iterate_keeps_close_roots_apart(self):
        roots = np.array([1.0, 1.001, -2.0])

        def newton_ratio(z):
            return 1.0 / np.sum(1.0 / (z[:, None] - roots[None, :]), axis=1)

        z, converged = rootfinding.aberth_iterate(newton_ratio, [1.0 + 0.01j, 1.0 - 0.01j, -1.5])
        self.assertTrue(converged)
        np.testing.assert_allclose(sorted(z.real), [-2.0, 1.0, 1.001], atol=1e-12)
        np.testing.assert_allclose(z.imag, 0, atol=1e-12)

    def test_huge_integer_coefficients(self):
        # (a - 2^200) (a - 3 * 2^200)
        big = 2 ** 200
        roots = sorted(rootfinding.integer_polynomial_roots([3 * big * big, -4 * big, 1]),
                       key=lambda z: z.real)
        np.testing.assert_allclose([r.real / big for r in roots], [1, 3], rtol=1e-12)

    def test_merge_close(self):
        merged = rootfinding.merge_close([1.0, 1.0 + 1e-12, 2.0], 1e-9)
        self.assertEqual(merged, [1.0, 2.0])


if __name__ == '__main__':
    unittest.main()
