"""Double precision roots of univariate polynomials.

Coefficient arrays are ordered lowest degree first throughout, as in
numpy.polynomial.polynomial.  Small degrees use the eigenvalues of the
companion matrix (numpy.roots); larger ones use a vectorised Aberth-Ehrlich
iteration.  Integer polynomials with huge coefficients are rescaled by a power
of two before conversion to floats.
"""
import math
from fractions import Fraction

import numpy as np

from .errors import RootFindingError


COMPANION_MAX_DEGREE = 60
ABERTH_TOLERANCE = 1e-14
ABERTH_MAX_ITERATIONS = 500
# accepted after the iteration budget: clustered roots converge linearly
ABERTH_LOOSE_TOLERANCE = 1e-6


def scaled_float_coefficients(coefficients):
    """Float image of an integer polynomial under a = 2^t b.

    :returns: (coefficients in b, lowest first, largest magnitude 1; 2.**t)
    """
    coefficients = [int(c) for c in coefficients]
    nonzero = [k for k, c in enumerate(coefficients) if c]
    if not nonzero:
        raise RootFindingError(message='the zero polynomial has no isolated roots')
    low, high = nonzero[0], nonzero[-1]
    shift = 0
    if high > low:
        shift = round((math.log2(abs(coefficients[low]))
                       - math.log2(abs(coefficients[high]))) / (high - low))
    top = max(coefficients[k].bit_length() + shift * k for k in nonzero)
    two = Fraction(2)
    floats = [float(Fraction(c) * two ** (shift * k - top)) if c else 0.0
              for k, c in enumerate(coefficients[:high + 1])]
    if floats[-1] == 0.0:
        raise RootFindingError(degree=high)
    return np.array(floats), 2.0 ** shift


def normalized_residual(coefficients, x):
    """|p(x)| / sum |c_k| |x|^k."""
    coefficients = np.asarray(coefficients)
    value = np.polynomial.polynomial.polyval(x, coefficients)
    scale = np.polynomial.polynomial.polyval(np.abs(x), np.abs(coefficients))
    return np.abs(value) / np.where(scale > 0, scale, 1.0)


def _newton_ratio(coefficients, z):
    """p(z) / p'(z), evaluated through the reversed polynomial outside the unit disk."""
    high_first = coefficients[::-1]
    degree = len(coefficients) - 1
    ratio = np.empty_like(z)
    inside = np.abs(z) <= 1.0
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        if inside.any():
            zi = z[inside]
            ratio[inside] = (np.polyval(high_first, zi)
                             / np.polyval(np.polyder(high_first), zi))
        if (~inside).any():
            zo = z[~inside]
            w = 1.0 / zo
            reversed_poly = coefficients  # q(w) = sum c_k w^(d-k)
            q = np.polyval(reversed_poly, w)
            dq = np.polyval(np.polyder(reversed_poly), w)
            ratio[~inside] = zo / (degree - w * dq / q)
    return np.where(np.isfinite(ratio), ratio, 0.0)


def _aberth_corrections(ratio, z):
    differences = z[:, None] - z[None, :]
    np.fill_diagonal(differences, 1.0)
    inverse = 1.0 / differences
    np.fill_diagonal(inverse, 0.0)
    correction = ratio / (1.0 - ratio * inverse.sum(axis=1))
    return np.where(np.isfinite(correction), correction, 0.0)


def aberth_iterate(newton_ratio, z, tol=ABERTH_TOLERANCE,
                   max_iterations=ABERTH_MAX_ITERATIONS):
    """Aberth-Ehrlich iteration from the approximations z.

    newton_ratio(z) is p(z) / p'(z) for the polynomial whose roots are sought;
    the repulsion between approximations keeps two of them from settling on
    the same root.

    :returns: (roots, True when every correction fell below tol)
    """
    z = np.array(z, dtype=complex)
    for _ in range(max_iterations):
        correction = _aberth_corrections(newton_ratio(z), z)
        z = z - correction
        if np.all(np.abs(correction) <= tol * np.maximum(np.abs(z), 1.0)):
            return z, True
    return z, False


def aberth(coefficients, tol=ABERTH_TOLERANCE, max_iterations=ABERTH_MAX_ITERATIONS):
    """All roots of a polynomial by simultaneous Aberth-Ehrlich iteration."""
    c = np.asarray(coefficients, dtype=complex)
    degree = len(c) - 1
    c = c / c[-1]
    nonzero = np.abs(c[:-1]) > 0
    if not nonzero.any():
        return np.zeros(degree, dtype=complex)
    powers = np.arange(degree, 0, -1)[nonzero]
    radius = np.exp(np.mean(np.log(np.abs(c[:-1][nonzero])) / powers))
    angles = 2 * np.pi * np.arange(degree) / degree + 0.4
    z = radius * np.exp(1j * angles)

    z, converged = aberth_iterate(lambda x: _newton_ratio(c, x), z, tol, max_iterations)
    if converged:
        return z
    correction = _aberth_corrections(_newton_ratio(c, z), z)
    if np.all(np.abs(correction) <= ABERTH_LOOSE_TOLERANCE * np.maximum(np.abs(z), 1.0)):
        return z
    raise RootFindingError(degree=degree)


def polish_roots(coefficients, roots, iterations=3):
    """A few Newton steps per root, each kept only if it lowers |p|."""
    coefficients = np.asarray(coefficients, dtype=complex)
    derivative = np.polynomial.polynomial.polyder(coefficients)
    roots = np.array(roots, dtype=complex)
    value = np.abs(np.polynomial.polynomial.polyval(roots, coefficients))
    for _ in range(iterations):
        with np.errstate(divide='ignore', invalid='ignore'):
            step = (np.polynomial.polynomial.polyval(roots, coefficients)
                    / np.polynomial.polynomial.polyval(roots, derivative))
        candidate = roots - np.where(np.isfinite(step), step, 0.0)
        new_value = np.abs(np.polynomial.polynomial.polyval(candidate, coefficients))
        better = new_value < value
        roots = np.where(better, candidate, roots)
        value = np.where(better, new_value, value)
    return roots


def polynomial_roots(coefficients):
    """Roots of a float or complex polynomial, with multiplicity."""
    c = np.trim_zeros(np.asarray(coefficients, dtype=complex), 'b')
    if len(c) == 0:
        raise RootFindingError(message='the zero polynomial has no isolated roots')
    zeros_at_origin = len(c) - len(np.trim_zeros(c, 'f'))
    c = c[zeros_at_origin:]
    degree = len(c) - 1
    if degree == 0:
        roots = np.zeros(0, dtype=complex)
    elif degree <= COMPANION_MAX_DEGREE:
        roots = np.roots(c[::-1]).astype(complex)
    else:
        roots = aberth(c)
    if not np.all(np.isfinite(roots)):
        raise RootFindingError(degree=degree)
    if degree > 0:
        roots = polish_roots(c, roots)
    return np.concatenate([np.zeros(zeros_at_origin, dtype=complex), roots])


def integer_polynomial_roots(coefficients):
    """Roots of an integer polynomial whose coefficients may overflow a double."""
    scaled, scale = scaled_float_coefficients(coefficients)
    return polynomial_roots(scaled) * scale


def merge_close(points, tol):
    """Collapse points closer than tol * (1 + |x|), keeping the first of each cluster."""
    kept = []
    for x in points:
        if all(abs(x - y) > tol * (1 + abs(y)) for y in kept):
            kept.append(x)
    return kept
