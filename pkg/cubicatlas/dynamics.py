"""Dynamics of one critically marked cubic

    P_{a,v}(z) = z^3 - 3 a^2 z + 2 a^3 + v,

with critical points +a (marked periodic) and -a (free), and co-critical
points -2a and +2a.  All computations are in double precision; error bounds
are forward estimates, valid modulo floating point.
"""
import cmath
import collections
import enum
import math

import numpy as np

from .exactpoly import divisors, mobius
from .errors import (AmbiguousPeriod, BranchError, DomainError, OrbitOverflow,
                     UndeterminedOrbit)


DEFAULT_TOL = 1e-12
DEFAULT_BUDGET = 10000

OVERFLOW_MODULUS = 1e100
FLOAT_ALLOWANCE = 1e-15   # relative round-off charged to every Green value
GROWTH_WINDOW = 8         # moduli inspected to call a non-escaped orbit "growing"
MAX_CYCLE_PERIOD = 16
CYCLE_TOLERANCE = 1e-10
GRID_BIG = 1e30


class EscapeClass(enum.Enum):
    ESCAPE_LOCUS = 'escape-locus'
    BOUNDED = 'bounded'
    UNDETERMINED = 'undetermined'


class CubicMap(object):

    __slots__ = ('a', 'v')

    def __init__(self, a, v):
        self.a = complex(a)
        self.v = complex(v)

    @property
    def c(self):
        """Constant term 2a^3 + v."""
        return 2 * self.a * self.a * self.a + self.v

    @property
    def critical_points(self):
        return self.a, -self.a

    @property
    def cocritical_points(self):
        """Co-critical points of +a and -a: P(-2a) = P(a), P(2a) = P(-a)."""
        return -2 * self.a, 2 * self.a

    @property
    def escape_radius(self):
        return max(4.0, 2.0 * (1.0 + abs(self.a) ** 2 + abs(self.c)))

    def __call__(self, z):
        return z * z * z - 3 * self.a * self.a * z + self.c

    def derivative(self, z):
        return 3 * (z * z - self.a * self.a)

    def involution(self):
        return CubicMap(-self.a, -self.v)

    def __eq__(self, other):
        return (isinstance(other, CubicMap)
                and self.a == other.a and self.v == other.v)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.a, self.v))

    def __repr__(self):
        return 'CubicMap(a={!r}, v={!r})'.format(self.a, self.v)


class GreenValue(object):

    def __init__(self, value, error_bound, iterations_used,
                 escape_class=EscapeClass.ESCAPE_LOCUS, undetermined_possible=False):
        self.value = value
        self.error_bound = error_bound
        self.iterations_used = iterations_used
        self.escape_class = escape_class
        self.undetermined_possible = undetermined_possible

    @property
    def escaped(self):
        return self.escape_class is EscapeClass.ESCAPE_LOCUS

    @property
    def lower(self):
        return max(self.value - self.error_bound, 0.0)

    @property
    def upper(self):
        return self.value + self.error_bound

    def __repr__(self):
        return 'GreenValue({!r} +- {:.2g}, {} iterations, {})'.format(
            self.value, self.error_bound, self.iterations_used, self.escape_class.value)


def orbit(cubic, z, k):
    """[z, f(z), ..., f^k(z)]; overflow raises OrbitOverflow."""
    if k < 0:
        raise DomainError(message='orbit length must be nonnegative')
    points = [complex(z)]
    for step in range(1, k + 1):
        w = cubic(points[-1])
        if not cmath.isfinite(w):
            raise OrbitOverflow(step=step)
        points.append(w)
    return points


def _strictly_growing(moduli):
    return len(moduli) >= 2 and all(x < y for x, y in zip(moduli, list(moduli)[1:]))


def _settled_on_cycle(points):
    points = list(points)
    last = points[-1]
    for period in range(1, min(MAX_CYCLE_PERIOD, len(points) - 2) + 1):
        scale = CYCLE_TOLERANCE * (1 + abs(last))
        if (abs(last - points[-1 - period]) < scale
                and abs(points[-2] - points[-2 - period]) < scale):
            return True
    return False


def green(cubic, z, tol=DEFAULT_TOL, budget=DEFAULT_BUDGET):
    """Green's function g(z) = lim 3^-m log|f^m(z)| with an error bound.

    Once |f^m(z)| exceeds the escape radius R0, |f(w) / w^3 - 1| <= eps(w) with
    eps(w) = 3|a|^2/|w|^2 + |2a^3 + v|/|w|^3, which gives
    |g(z) - 3^-m log|f^m(z)|| <= 3^-m eps(f^m(z)).  Iterations after escape are
    not charged to the budget.

    :raises UndeterminedOrbit: budget exhausted while the orbit is still growing.
    """
    if tol <= 0:
        raise DomainError(message='tolerance must be positive')
    radius = cubic.escape_radius
    a2, c = abs(cubic.a) ** 2, abs(cubic.c)
    w = complex(z)
    moduli = collections.deque([abs(w)], maxlen=GROWTH_WINDOW)
    recent = collections.deque([w], maxlen=MAX_CYCLE_PERIOD + 2)
    steps = 0
    while abs(w) <= radius:
        if steps >= budget:
            if _strictly_growing(moduli):
                raise UndeterminedOrbit(budget=budget)
            bound = 3.0 ** -steps * (math.log(radius) + 1.0)
            return GreenValue(0.0, bound, steps, EscapeClass.BOUNDED,
                              undetermined_possible=not _settled_on_cycle(recent))
        w = cubic(w)
        steps += 1
        moduli.append(abs(w))
        recent.append(w)

    escape_steps = steps
    while True:
        r = abs(w)
        weight = 3.0 ** -steps
        value = weight * math.log(r)
        tail = weight * (3 * a2 / r ** 2 + c / r ** 3)
        allowance = FLOAT_ALLOWANCE * (1.0 + value)
        if tail + allowance <= tol or r > OVERFLOW_MODULUS:
            break
        w = cubic(w)
        steps += 1
    return GreenValue(value, tail + allowance, escape_steps)


def classify_escape(cubic, tol=DEFAULT_TOL, budget=DEFAULT_BUDGET):
    """Escape class of the free critical point -a."""
    try:
        g = green(cubic, -cubic.a, tol=tol, budget=budget)
    except UndeterminedOrbit:
        return EscapeClass.UNDETERMINED
    if g.escape_class is EscapeClass.BOUNDED:
        return EscapeClass.BOUNDED
    if g.value - g.error_bound > 0:
        return EscapeClass.ESCAPE_LOCUS
    return EscapeClass.UNDETERMINED


def orbit_condition(cubic, n):
    """(1 + |a|) prod_{1 <= j < n} max(1, |f'(f^j(a))|), the growth of rounding errors."""
    scale = 1.0 + abs(cubic.a)
    z = cubic.a
    for _ in range(1, n):
        z = cubic(z)
        scale *= max(1.0, abs(cubic.derivative(z)))
    return scale


def exact_period(cubic, nmax, tol=DEFAULT_TOL, relative=False):
    """Smallest n <= nmax with |f^n(a) - a| < tol, every earlier distance >= 10 tol.

    With relative=True the tolerance at step k is scaled by orbit_condition(cubic, k),
    as needed for parameters with large |a|.

    :raises AmbiguousPeriod: some distance falls in the window [tol, 10 tol).
    """
    if nmax < 1:
        raise DomainError(message='nmax must be at least 1')
    a = cubic.a
    z = a
    scale = 1.0 + abs(a) if relative else 1.0
    ambiguous = None
    for k in range(1, nmax + 1):
        if relative and k > 1:
            scale *= max(1.0, abs(cubic.derivative(z)))
        z = cubic(z)
        if not cmath.isfinite(z) or abs(z) > OVERFLOW_MODULUS:
            break
        distance = abs(z - a)
        window = tol * scale
        if distance < window:
            if ambiguous is not None:
                raise AmbiguousPeriod(period=ambiguous[0], distance=ambiguous[1])
            return k
        if distance < 10 * window and ambiguous is None:
            ambiguous = (k, distance)
    if ambiguous is not None:
        raise AmbiguousPeriod(period=ambiguous[0], distance=ambiguous[1])
    return None


def bottcher(cubic, z, tol=DEFAULT_TOL):
    """Böttcher coordinate phi(z), phi(f(z)) = phi(z)^3 and phi(z)/z -> 1.

    phi(z) = z prod_k (f(z_k) / z_k^3)^(3^-(k+1)) with principal roots; every
    factor must stay within 1/2 of 1.
    """
    radius = cubic.escape_radius
    w = complex(z)
    if abs(w) < radius:
        raise BranchError(step=0)
    log_sum = 0j
    step = 0
    while True:
        fw = cubic(w)
        u = fw / (w * w * w)
        if abs(u - 1) >= 0.5:
            raise BranchError(step=step)
        term = cmath.log(u) / 3.0 ** (step + 1)
        log_sum += term
        w = fw
        step += 1
        if abs(term) < tol * 1e-3 or abs(w) > OVERFLOW_MODULUS:
            break
    return complex(z) * cmath.exp(log_sum)


def critical_orbit_jet(a, v, steps):
    """{k: (Q_k, dQ_k/dv, dQ_k/da)} for k in steps, with Q_k = f^k(a) - a,
    vectorised over v.

    Derivatives are carried along the orbit: dz_{k+1}/dv = f'(z_k) dz_k/dv + 1
    and dz_{k+1}/da = f'(z_k) dz_k/da - 6a z_k + 6a^2.
    """
    a = complex(a)
    v = np.asarray(v, dtype=complex)
    a2, a3 = a * a, a * a * a
    z = np.full(v.shape, a, dtype=complex)
    dv = np.zeros(v.shape, dtype=complex)
    da = np.ones(v.shape, dtype=complex)
    wanted = set(steps)
    jets = {}
    with np.errstate(over='ignore', invalid='ignore'):
        for k in range(1, max(wanted) + 1):
            slope = 3 * (z * z - a2)
            dv = slope * dv + 1
            da = slope * da - 6 * a * z + 6 * a2
            z = z * z * z - 3 * a2 * z + 2 * a3 + v
            if k in wanted:
                jets[k] = (z - a, dv, da - 1)
    return jets


def _mobius_weights(n):
    weights = {d: mobius(n // d) for d in divisors(n)}
    return {d: w for d, w in weights.items() if w}


def exact_period_newton_step(a, v, n):
    """Newton step Phi_n / (d Phi_n / dv) at fixed a, vectorised over v.

    Phi_n is the product of the Q_d^mobius(n/d) over d | n, with
    Q_d = f^d(a) - a, so its logarithmic derivative in v is a sum of
    orbit ratios.  Only the orbit is evaluated, never the expanded
    polynomial, whose coefficients grow too fast for double precision.
    Non-finite entries mark values where some Q_d vanishes or overflows.
    """
    weights = _mobius_weights(n)
    jets = critical_orbit_jet(a, v, weights)
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        log_derivative = sum(w * jets[d][1] / jets[d][0] for d, w in weights.items())
        return 1.0 / log_derivative


def parameter_slope(a, v, n):
    """dv/da along Phi_n(a, v) = 0 at points of the curve, vectorised over v.

    -(dPhi_n/da) / (dPhi_n/dv), with both logarithmic derivatives multiplied
    by Q_n so that the quotient stays finite on the curve.
    """
    weights = _mobius_weights(n)
    jets = critical_orbit_jet(a, v, weights)
    q, q_v, q_a = jets[n]
    with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
        rest_v = sum(w * jets[d][1] / jets[d][0] for d, w in weights.items() if d != n)
        rest_a = sum(w * jets[d][2] / jets[d][0] for d, w in weights.items() if d != n)
        return -(q_a + q * rest_a) / (q_v + q * rest_v)


def refine_parameter(a, v, n, iterations=60, tol=1e-15):
    """Newton's method in v on Phi_n(a, .) = 0 at fixed a.

    Roots of the factors of smaller period repel the iteration, so a
    nearby parameter of exact period n is found.
    """
    a, v = complex(a), complex(v)
    for _ in range(iterations):
        step = complex(exact_period_newton_step(a, np.array([v]), n)[0])
        if not cmath.isfinite(step):
            break
        v -= step
        if abs(step) <= tol * (1 + abs(v)):
            break
    return v


def grid_iterations(threshold, big=GRID_BIG, max_iterations=200):
    """Iterations after which unescaped points are certainly below threshold / 1000."""
    if threshold <= 0:
        raise DomainError(message='grid threshold must be positive')
    needed = math.log((math.log(big) + 1.0) / (1e-3 * threshold)) / math.log(3.0)
    return int(min(max(math.ceil(needed), 1), max_iterations))


def green_grid(cubic, points, threshold, big=GRID_BIG):
    """Vectorised Green's function, accurate enough to compare with threshold.

    Points are frozen once |f^k(z)| > big and given 3^-k log|f^k(z)|.
    """
    z = np.array(points, dtype=complex)
    values = np.zeros(z.shape, dtype=float)
    active = np.ones(z.shape, dtype=bool)
    iterations = grid_iterations(threshold, big=big)
    for k in range(1, iterations + 1):
        z[active] = cubic(z[active])
        escaped = active & (np.abs(z) > big)
        values[escaped] = np.log(np.abs(z[escaped])) / 3.0 ** k
        active &= ~escaped
        if not active.any():
            break
    values[active] = np.log(np.maximum(np.abs(z[active]), 1.0)) / 3.0 ** iterations
    return values
