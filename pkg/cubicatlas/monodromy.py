"""Monodromy of the projection (a, v) -> a restricted to the curve Phi_n = 0.

The fiber over a parameter a is the set of roots v of Phi_n(a, .).  Branch
points are the roots of the discriminant in v; away from them the roots are
continued along paths by a predictor-corrector tracker, and the permutations
they undergo around the branch points generate the monodromy group.  Its
orbits on a fiber are the connected components of the curve.
"""
import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from functools import reduce

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _graph_components

from . import dynamics
from . import exactpoly
from . import rootfinding
from .events import (BranchPointsEvent, DegenerateParameterEvent,
                     LoopTrackedEvent)
from .errors import (AmbiguousPeriod, CollisionError, ConsistencyError,
                     DomainError, MatchingError, TrackingStall,
                     UnstableAtInfinity)


DEFAULT_MAX_PERIOD = 5
RESIDUAL_TOL = 1e-8
MIN_STEP = 1e-12
NEWTON_ITERATIONS = 8
CIRCLE_POINTS = 64
MERGE_TOL = 1e-8
CLEARANCE = 0.25
INFINITY_SAMPLES = 8

INITIAL_STEP = 0.125
NEWTON_STEP_TOL = 1e-13
FIBER_POLISH_ITERATIONS = 50
SQUAREFREE_MAX_DEGREE = 200
AXIS_CLEARANCE = 0.1      # radians between the base point and the coordinate axes
ARC_STEP = math.pi / 16   # largest angle between detour vertices
CANONICAL_DIGITS = 9


def _canonical_key(x):
    return (round(x.real, CANONICAL_DIGITS), round(x.imag, CANONICAL_DIGITS))


def as_complex(x):
    """complex from a number or a stored [re, im] pair."""
    if isinstance(x, (list, tuple)):
        re, im = x
        return complex(re, im)
    return complex(x)


def min_separation(roots):
    roots = np.asarray(roots, dtype=complex)
    if len(roots) < 2:
        return math.inf
    distances = np.abs(roots[:, None] - roots[None, :])
    np.fill_diagonal(distances, np.inf)
    return float(distances.min())


# Permutations

class Permutation(object):
    """Bijection of {0, ..., d-1}, i -> images[i].

    p.then(q) applies p first: (p.then(q))(i) = q(p(i)).
    """

    __slots__ = ('images',)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise DomainError(message='not a permutation: {}'.format(images))
        self.images = images

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree):
        images = list(range(degree))
        for cycle in cycles:
            for i, x in enumerate(cycle):
                images[x] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @classmethod
    def from_cycle_notation(cls, text, degree):
        """Inverse of cycle_notation(): '(0 2)(1 3)'."""
        cycles = []
        for chunk in text.split(')'):
            chunk = chunk.strip().lstrip('(')
            if chunk:
                cycles.append([int(x) for x in chunk.split()])
        return cls.from_cycles(cycles, degree)

    def __len__(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return 'Permutation({})'.format(self.cycle_notation())

    def then(self, other):
        if len(other) != len(self):
            raise DomainError(message='permutations of different degrees')
        return Permutation(other.images[i] for i in self.images)

    def inverse(self):
        images = [0] * len(self.images)
        for i, j in enumerate(self.images):
            images[j] = i
        return Permutation(images)

    @property
    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        """All cycles, fixed points included, each starting at its least element."""
        seen = set()
        cycles = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j]
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def cycle_notation(self):
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return '()'
        return ''.join('(' + ' '.join(str(x) for x in c) + ')' for c in moved)


def compose_all(permutations, degree):
    """Product applying the first permutation first."""
    return reduce(lambda p, q: p.then(q), permutations, Permutation.identity(degree))


# Curve and fibers

class Fiber(object):
    """Roots v_0 .. v_(d-1) over one base parameter; the index is the label."""

    def __init__(self, base, roots):
        self.base = complex(base)
        self.roots = np.array(roots, dtype=complex)
        self.min_separation = min_separation(self.roots)

    @classmethod
    def canonical(cls, base, roots):
        """Labels assigned by sorting on (real part, imaginary part)."""
        return cls(base, sorted(np.asarray(roots, dtype=complex), key=_canonical_key))

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return 'Fiber(base={!r}, {} roots)'.format(self.base, len(self.roots))


class NumericCurve(object):
    """Phi_n in double precision, with fiber solving and Newton correction.

    With the period n known, Newton steps and fiber polishing go through the
    critical orbit (dynamics.exact_period_newton_step); the expanded
    coefficients only seed the fiber and measure residuals.
    """

    def __init__(self, poly, n=None):
        self.n = n
        self.exact = poly
        self.numeric = exactpoly.NumericPolynomial(poly)
        self.degree = poly.degree_v
        self.matrix = self.numeric.matrix
        self.da_matrix = self.numeric.da_matrix

    @classmethod
    def for_period(cls, n, max_period=DEFAULT_MAX_PERIOD):
        return cls(exactpoly.build_Phin(n, max_period=max_period), n=n)

    def coefficients(self, a):
        return self.numeric.fiber_coefficients(complex(a))

    def newton_step(self, a, v):
        """Phi_n / (d Phi_n / dv) at each v of the array; non-finite where undefined."""
        v = np.asarray(v, dtype=complex)
        if self.n is not None:
            return dynamics.exact_period_newton_step(complex(a), v, self.n)
        coefficients = self.coefficients(a)
        with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
            return npoly.polyval(v, coefficients) / npoly.polyval(v, npoly.polyder(coefficients))

    def solve_fiber(self, a):
        roots = rootfinding.polynomial_roots(self.coefficients(a))
        if len(roots) != self.degree:
            raise ConsistencyError(message='fiber over {} has {} roots, expected {}'.format(
                a, len(roots), self.degree))
        if self.n is not None and len(roots) > 1:
            roots = self._polish_fiber(a, roots)
        return Fiber.canonical(a, roots)

    def _polish_fiber(self, a, roots):
        """Aberth iteration on the orbit ratio, from the coefficient roots."""
        polished, _ = rootfinding.aberth_iterate(
            lambda v: self.newton_step(a, v), roots, tol=NEWTON_STEP_TOL,
            max_iterations=FIBER_POLISH_ITERATIONS)
        if not np.all(np.isfinite(polished)):
            return roots
        return polished

    def residuals(self, a, roots):
        return self.numeric.normalized_residual(complex(a), np.asarray(roots, dtype=complex))

    def jet(self, a, v):
        """Phi, Phi_a, Phi_v, Phi_av, Phi_vv at (a, v)."""
        coefficients = self.coefficients(a)
        dv = npoly.polyder(coefficients)
        dvv = npoly.polyder(dv) if len(dv) > 1 else np.zeros(1, dtype=complex)
        if self.da_matrix.shape[0]:
            da = npoly.polyval(complex(a), self.da_matrix)
        else:
            da = np.zeros(1, dtype=complex)
        dav = npoly.polyder(da) if len(da) > 1 else np.zeros(1, dtype=complex)
        return (npoly.polyval(v, coefficients), npoly.polyval(v, da),
                npoly.polyval(v, dv), npoly.polyval(v, dav), npoly.polyval(v, dvv))


# Branch points

class BranchLocus(object):

    def __init__(self, n, points, residuals, discriminant_degree):
        self.n = n
        self.points = points
        self.residuals = residuals
        self.discriminant_degree = discriminant_degree

    @property
    def max_residual(self):
        return max(self.residuals) if self.residuals else 0.0

    @property
    def radius(self):
        return max(abs(b) for b in self.points) if self.points else 0.0

    def __len__(self):
        return len(self.points)


def _polish_branch_point(curve, beta, iterations=30):
    """Newton on (Phi, Phi_v) = 0 from the closest pair of roots over beta."""
    roots = curve.solve_fiber(beta).roots
    if len(roots) < 2:
        return beta
    distances = np.abs(roots[:, None] - roots[None, :])
    np.fill_diagonal(distances, np.inf)
    i, j = np.unravel_index(np.argmin(distances), distances.shape)
    a, v = complex(beta), complex((roots[i] + roots[j]) / 2)
    for _ in range(iterations):
        f, fa, fv, fav, fvv = curve.jet(a, v)
        determinant = fa * fvv - fv * fav
        if determinant == 0 or not cmath.isfinite(determinant):
            break
        da = (f * fvv - fv * fv) / determinant
        dv = (fa * fv - fav * f) / determinant
        a, v = a - da, v - dv
        if abs(da) + abs(dv) <= 1e-15 * (1 + abs(a) + abs(v)):
            break
    if cmath.isfinite(a) and abs(a - beta) < 1e-3 * (1 + abs(beta)):
        return a
    return complex(beta)


def branch_locus(n, curve=None, merge_tol=MERGE_TOL, max_period=DEFAULT_MAX_PERIOD,
                 squarefree_max_degree=SQUAREFREE_MAX_DEGREE):
    """Roots of the discriminant of Phi_n in v, polished and merged.

    A discriminant with a nontrivial gcd with its derivative modulo two
    large primes is reduced to its squarefree part exactly up to
    squarefree_max_degree; above it the repeated roots are merged after
    polishing, and fewer points than distinct roots is an error.  The
    residual of each point is the normalised value of the discriminant,
    evaluated on its power-of-two rescaling.
    """
    if curve is None:
        curve = NumericCurve.for_period(n, max_period=max_period)
    phi = curve.exact
    if phi.degree_v < 2:
        return BranchLocus(n, [], [], 0)
    discriminant = exactpoly.discriminant_v(phi)
    if discriminant.is_zero:
        raise ConsistencyError(message='Phi_{} has a vanishing discriminant'.format(n))
    reduced = discriminant
    repeated = discriminant.repeated_root_count()
    if repeated is None or (repeated and discriminant.degree <= squarefree_max_degree):
        reduced, repeated = discriminant.squarefree_part(), 0
    if reduced.degree < 1:
        return BranchLocus(n, [], [], discriminant.degree)
    rough = rootfinding.integer_polynomial_roots(reduced.coefficients)
    polished = [_polish_branch_point(curve, complex(b)) for b in rough]
    points = sorted(rootfinding.merge_close(polished, merge_tol), key=_canonical_key)
    if len(points) < reduced.degree - repeated:
        raise ConsistencyError(message='period {}: {} branch points for at least {} distinct '
                                       'discriminant roots'.format(n, len(points),
                                                                   reduced.degree - repeated))

    scaled, scale = rootfinding.scaled_float_coefficients(discriminant.coefficients)
    residuals = [float(r) for r in
                 rootfinding.normalized_residual(scaled, np.array(points) / scale)]
    BranchPointsEvent(n, count=len(points)).send()
    return BranchLocus(n, points, residuals, discriminant.degree)


def branch_points(n, curve=None, **kwargs):
    return branch_locus(n, curve=curve, **kwargs).points


# Path tracking

class TrackedPath(object):

    def __init__(self, roots, vertex_roots, max_residual, steps):
        self.roots = roots
        self.vertex_roots = vertex_roots
        self.max_residual = max_residual
        self.steps = steps


class Tracker(object):
    """Continuation of all roots of a fiber along a polyline.

    Each step predicts with the previous roots and corrects with at most
    newton_iterations vectorised Newton steps.  A step is accepted when the
    corrected roots have normalised residual below residual_tol, no root moved
    by more than a third of the current separation plus the size of a Newton
    step at the segment start (its round-off), and the separation did not
    drop below a third of its value.  Rejected steps halve the step length; three
    accepted ones in a row double it.
    """

    def __init__(self, curve, residual_tol=RESIDUAL_TOL, min_step=MIN_STEP,
                 newton_iterations=NEWTON_ITERATIONS, initial_step=INITIAL_STEP):
        self.curve = curve
        self.residual_tol = residual_tol
        self.min_step = min_step
        self.newton_iterations = int(newton_iterations)
        self.step = initial_step
        self.max_residual = 0.0
        self.steps = 0

    def correct(self, a, roots):
        v = np.array(roots, dtype=complex)
        converged = False
        for _ in range(self.newton_iterations):
            delta = self.curve.newton_step(a, v)
            if not np.all(np.isfinite(delta)):
                return v, False, math.inf
            v = v - delta
            if np.all(np.abs(delta) <= NEWTON_STEP_TOL * (1 + np.abs(v))):
                converged = True
                break
        residual = float(np.max(self.curve.residuals(a, v))) if len(v) else 0.0
        ok = residual < self.residual_tol and (converged or residual < 1e-3 * self.residual_tol)
        return v, ok, residual

    def noise_floor(self, a, roots):
        """Largest Newton step at roots already on the curve: the round-off of the step."""
        if not len(roots):
            return 0.0
        delta = self.curve.newton_step(a, roots)
        if not np.all(np.isfinite(delta)):
            return 0.0
        return float(np.max(np.abs(delta)))

    def track_segment(self, start, end, roots):
        start, end = complex(start), complex(end)
        roots = np.array(roots, dtype=complex)
        if start == end:
            return roots
        separation = min_separation(roots)
        floor = self.noise_floor(start, roots)
        t, h, successes = 0.0, min(self.step, 1.0), 0
        while t < 1.0:
            h = min(h, 1.0 - t)
            a = start + (t + h) * (end - start)
            v, ok, residual = self.correct(a, roots)
            collision = False
            if ok:
                new_separation = min_separation(v)
                if np.max(np.abs(v - roots)) >= separation / 3 + floor:
                    ok = False
                elif new_separation < separation / 3:
                    ok, collision = False, True
            if ok:
                roots, separation = v, new_separation
                t += h
                self.max_residual = max(self.max_residual, residual)
                self.steps += 1
                successes += 1
                if successes >= 3:
                    h, successes = 2 * h, 0
            else:
                h, successes = h / 2, 0
                if h < self.min_step:
                    if collision:
                        raise CollisionError(location=a)
                    raise TrackingStall(location=a, step=h)
        self.step = max(h, self.min_step)
        return roots

    def track(self, path, roots):
        path = [complex(a) for a in path]
        roots = np.array(roots, dtype=complex)
        vertex_roots = [roots]
        for start, end in zip(path, path[1:]):
            roots = self.track_segment(start, end, roots)
            vertex_roots.append(roots)
        return TrackedPath(roots, vertex_roots, self.max_residual, self.steps)


def match_roots(tracked, reference, separation=None):
    """perm[i] = j when tracked[i] is reference[j]; nearest within a third of the gap."""
    tracked = np.asarray(tracked, dtype=complex)
    reference = np.asarray(reference, dtype=complex)
    if separation is None:
        separation = min_separation(reference)
    if len(tracked) != len(reference):
        raise MatchingError(reason='{} tracked roots for {} fiber roots'.format(
            len(tracked), len(reference)))
    if not len(tracked):
        return Permutation(())
    distances = np.abs(tracked[:, None] - reference[None, :])
    images = np.argmin(distances, axis=1)
    worst = float(distances[np.arange(len(tracked)), images].max())
    if worst >= separation / 3:
        raise MatchingError(reason='a tracked root is {:.3g} away from the fiber'.format(worst))
    if len(set(images.tolist())) != len(images):
        raise MatchingError(reason='two tracked roots end on the same fiber root')
    return Permutation(images)


def track_fiber(curve, path, fiber, target=None, tracker=None, **options):
    """Continue fiber along path.

    :returns: (end fiber, permutation) with perm[i] the label reached by root i.
        The end fiber is target when given, the start fiber for closed paths
        and the canonically sorted end roots otherwise.
    """
    tracker = tracker or Tracker(curve, **options)
    path = [complex(a) for a in path]
    if abs(path[0] - fiber.base) > 1e-12 * (1 + abs(fiber.base)):
        raise DomainError(message='path does not start at the fiber base point')
    result = tracker.track(path, fiber.roots)
    end = path[-1]
    if target is None and abs(end - fiber.base) <= 1e-14 * (1 + abs(end)):
        target = fiber
    if target is None:
        target = Fiber.canonical(end, result.roots)
    return target, match_roots(result.roots, target.roots, target.min_separation)


# Loops

def circle_path(center, radius, start_angle, points=CIRCLE_POINTS, turns=1.0):
    """Closed counter-clockwise polyline, turns < 0 for clockwise."""
    count = max(int(math.ceil(points * abs(turns))), 2)
    angles = start_angle + 2 * math.pi * turns * np.arange(count + 1) / count
    path = [complex(center) + radius * cmath.exp(1j * t) for t in angles]
    if abs(turns) == 1.0:
        path[-1] = path[0]
    return path


def _arc(center, radius, start, sweep):
    count = max(2, int(math.ceil(abs(sweep) / ARC_STEP)))
    return [center + radius * cmath.exp(1j * (start + sweep * k / count))
            for k in range(count + 1)]


def detour_path(start, end, obstacles):
    """Segment from start to end, replaced by the minor arc around each disc it enters.

    obstacles are (center, radius) pairs with disjoint discs not containing start or end.
    """
    start, end = complex(start), complex(end)
    length = abs(end - start)
    if length == 0:
        return [start, end]
    u = (end - start) / length
    hits = []
    for center, radius in obstacles:
        relative = (complex(center) - start) * u.conjugate()
        along, across = relative.real, relative.imag
        if 0 < along < length and abs(across) < radius:
            hits.append((along, complex(center), radius))
    vertices = [start]
    for along, center, radius in sorted(hits):
        across = ((center - start) * u.conjugate()).imag
        half = math.sqrt(max(radius * radius - across * across, 0.0))
        entry = start + (along - half) * u
        leave = start + (along + half) * u
        theta_in = cmath.phase(entry - center)
        theta_out = cmath.phase(leave - center)
        closest = start + along * u
        theta_side = cmath.phase(closest - center) if closest != center else theta_in + 1e-3
        ccw = (theta_out - theta_in) % (2 * math.pi)
        if (theta_side - theta_in) % (2 * math.pi) < ccw:
            sweep = ccw
        else:
            sweep = ccw - 2 * math.pi
        vertices.extend(_arc(center, radius, theta_in, sweep))
    vertices.append(end)
    return vertices


class Lasso(object):
    """Loop based at base: a leg to a small circle around beta, the circle, the leg back."""

    def __init__(self, base, beta, radius, obstacles=(), circle_points=CIRCLE_POINTS):
        self.base, self.beta, self.radius = complex(base), complex(beta), radius
        direction = (self.base - self.beta) / abs(self.base - self.beta)
        self.entry = self.beta + radius * direction
        self.leg = detour_path(self.base, self.entry, obstacles)
        self.circle = circle_path(self.beta, radius, cmath.phase(direction), circle_points)
        self.back = self.leg[::-1]


def loop_radii(points, clearance=CLEARANCE):
    """clearance times the distance to the nearest other branch point."""
    radii = []
    for i, beta in enumerate(points):
        others = [abs(beta - gamma) for j, gamma in enumerate(points) if j != i]
        nearest = min(others) if others else max(abs(beta), 1.0)
        radii.append(clearance * nearest)
    return radii


def choose_base_point(points, seed=0):
    """Random point on the circle of radius 2 max|beta|, away from the axes."""
    rng = np.random.default_rng(seed)
    radius = 2 * max([abs(b) for b in points] + [0.5])
    while True:
        theta = rng.uniform(0, 2 * math.pi)
        offset = theta % (math.pi / 2)
        if min(offset, math.pi / 2 - offset) > AXIS_CLEARANCE:
            return radius * cmath.exp(1j * theta)


def loop_order(base, points):
    """Indices of points by increasing arg((beta - base) / (-base))."""
    return sorted(range(len(points)),
                  key=lambda i: cmath.phase((points[i] - base) / (-base)))


def _loop_generator(curve, fiber, lasso, options):
    tracker = Tracker(curve, **options)
    entry_fiber, outgoing = track_fiber(curve, lasso.leg, fiber, tracker=tracker)
    _, around = track_fiber(curve, lasso.circle, entry_fiber, tracker=tracker)
    _, back = track_fiber(curve, lasso.back, entry_fiber, target=fiber, tracker=tracker)
    if back != outgoing.inverse():
        raise MatchingError(reason='the return leg around {:.6g} does not undo the '
                                   'outgoing leg'.format(lasso.beta))
    return outgoing.then(around).then(back), tracker.max_residual


def orbits_of(generators, degree):
    """Orbits of the group generated by the permutations, as sorted label lists."""
    if degree == 0:
        return []
    rows, columns = [], []
    for g in generators:
        rows.extend(range(degree))
        columns.extend(g.images)
    graph = csr_matrix((np.ones(len(rows)), (rows, columns)), shape=(degree, degree))
    _, labels = _graph_components(graph, directed=True, connection='weak')
    orbits = {}
    for i, label in enumerate(labels):
        orbits.setdefault(label, []).append(i)
    return sorted(orbits.values())


class MonodromyResult(object):

    def __init__(self, n, degree, seed, base, fiber, branch, loops, generators,
                 infinity, max_residual, tolerances):
        self.n = n
        self.degree = degree
        self.seed = seed
        self.base = base
        self.fiber = fiber
        self.branch = branch
        self.loops = loops
        self.generators = generators
        self.infinity = infinity
        self.max_residual = max_residual
        self.tolerances = tolerances
        self.orbits = orbits_of(generators, degree) if generators else \
            [[i] for i in range(degree)]

    @property
    def branch_points(self):
        return self.branch.points

    @property
    def orbit_count(self):
        return len(self.orbits)

    @property
    def orbit_sizes(self):
        return [len(o) for o in self.orbits]

    @property
    def product(self):
        return compose_all(self.generators, self.degree)

    @property
    def product_relation_holds(self):
        """The loops in angular order compose to the circle through the base point."""
        return self.product.cycle_type() == self.infinity.cycle_type()

    def as_dict(self):
        return {
            'n': self.n,
            'degree': self.degree,
            'seed': self.seed,
            'base': self.base,
            'fiber': list(self.fiber.roots),
            'branch_points': list(self.branch.points),
            'branch_residuals': list(self.branch.residuals),
            'discriminant_degree': self.branch.discriminant_degree,
            'loops': self.loops,
            'generators': [g.cycle_notation() for g in self.generators],
            'infinity': self.infinity.cycle_notation(),
            'orbit_count': self.orbit_count,
            'orbits': self.orbits,
            'product_cycle_type': list(self.product.cycle_type()),
            'infinity_cycle_type': list(self.infinity.cycle_type()),
            'product_relation_holds': self.product_relation_holds,
            'max_residual': self.max_residual,
            'tolerances': dict(self.tolerances),
        }

    @classmethod
    def from_dict(cls, data):
        degree = data['degree']
        branch = BranchLocus(data['n'], [as_complex(b) for b in data['branch_points']],
                             list(data['branch_residuals']), data['discriminant_degree'])
        base = as_complex(data['base'])
        fiber = Fiber(base, [as_complex(v) for v in data['fiber']])
        generators = [Permutation.from_cycle_notation(g, degree) for g in data['generators']]
        infinity = Permutation.from_cycle_notation(data['infinity'], degree)
        loops = [dict(loop, beta=as_complex(loop['beta'])) for loop in data['loops']]
        return cls(data['n'], degree, data['seed'], base, fiber, branch, loops, generators,
                   infinity, data['max_residual'], data['tolerances'])


def tracking_options(residual_tol=RESIDUAL_TOL, min_step=MIN_STEP,
                     newton_iterations=NEWTON_ITERATIONS, **ignored):
    return {'residual_tol': residual_tol, 'min_step': min_step,
            'newton_iterations': newton_iterations}


def monodromy_tolerances(circle_points=CIRCLE_POINTS, clearance=CLEARANCE,
                         merge_tol=MERGE_TOL, **options):
    """Every setting a stored MonodromyResult depends on, besides the seed."""
    return dict(tracking_options(**options), circle_points=circle_points,
                clearance=clearance, merge_tol=merge_tol)


def connected_components(n, seed=0, max_period=DEFAULT_MAX_PERIOD, curve=None, workers=1,
                         circle_points=CIRCLE_POINTS, clearance=CLEARANCE,
                         merge_tol=MERGE_TOL, **options):
    """Monodromy group of the fibration over the a-plane and its orbits on one fiber.

    Every branch point beta gets a loop: the straight leg from the base point to
    a circle of radius clearance * (distance to the nearest branch point)
    around beta, skirting other such circles, once around counter-clockwise,
    and back.  Loops are ordered by the argument of (beta - base) / (-base), so
    that applying them in order equals the circle |a| = |base|.
    """
    options = tracking_options(**options)
    if curve is None:
        curve = NumericCurve.for_period(n, max_period=max_period)
    branch = branch_locus(n, curve=curve, merge_tol=merge_tol)
    degree = curve.degree
    base = choose_base_point(branch.points, seed)
    fiber = curve.solve_fiber(base)

    order = loop_order(base, branch.points)
    points = [branch.points[i] for i in order]
    radii = loop_radii(points, clearance)
    lassos = []
    for i, (beta, radius) in enumerate(zip(points, radii)):
        obstacles = [(gamma, r) for j, (gamma, r) in enumerate(zip(points, radii)) if j != i]
        lassos.append(Lasso(base, beta, radius, obstacles, circle_points))

    def run(lasso):
        return _loop_generator(curve, fiber, lasso, options)

    if workers > 1 and len(lassos) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run, lassos))
    else:
        results = [run(lasso) for lasso in lassos]

    generators = [g for g, _ in results]
    max_residual = max([r for _, r in results] + [0.0])
    for index, (lasso, g) in enumerate(zip(lassos, generators), 1):
        LoopTrackedEvent(n, index=index, total=len(lassos), beta=lasso.beta,
                         cycles=g.cycle_notation()).send()

    tracker = Tracker(curve, **options)
    _, infinity = track_fiber(curve, circle_path(0, abs(base), cmath.phase(base),
                                                 circle_points * 4),
                              fiber, tracker=tracker)
    max_residual = max(max_residual, tracker.max_residual)

    loops = [{'beta': lasso.beta, 'radius': lasso.radius, 'order': index}
             for index, lasso in enumerate(lassos)]
    tolerances = monodromy_tolerances(circle_points, clearance, merge_tol, **options)
    result = MonodromyResult(n, degree, seed, base, fiber, branch, loops, generators,
                             infinity, max_residual, tolerances)
    if not result.product_relation_holds:
        raise ConsistencyError(message='period {}: product of the loops has cycle type {}, '
                                       'the circle through the base point {}'.format(
                                           n, result.product.cycle_type(),
                                           result.infinity.cycle_type()))
    return result


def monodromy_components(n, **kwargs):
    """(orbit count, orbit partition)."""
    result = connected_components(n, **kwargs)
    return result.orbit_count, result.orbits


# Monodromy around infinity

class CircleTracking(object):
    """Roots continued once around |a| = radius from angle theta."""

    def __init__(self, radius, theta, fiber, permutation, sample_angles, sample_roots,
                 half_roots, max_residual):
        self.radius = radius
        self.theta = theta
        self.fiber = fiber
        self.permutation = permutation
        self.sample_angles = sample_angles
        self.sample_roots = sample_roots
        self.half_roots = half_roots  # continued roots over -radius e^(i theta)
        self.max_residual = max_residual

    def involution_labels(self):
        """label -> label of the root over the base point that the involution
        sends its continuation over the antipode to."""
        return match_roots(-self.half_roots, self.fiber.roots, self.fiber.min_separation)

    def samples(self, label):
        """(a, v) along the circle for the root starting with label."""
        return [(self.radius * cmath.exp(1j * t), complex(roots[label]))
                for t, roots in zip(self.sample_angles, self.sample_roots)]


def track_circle(curve, radius, theta=0.0, samples=INFINITY_SAMPLES,
                 circle_points=CIRCLE_POINTS, **options):
    options = tracking_options(**options)
    if samples < 1:
        raise DomainError(message='at least one sample per circle')
    per_sample = max(1, int(math.ceil(circle_points / float(samples))))
    if (per_sample * samples) % 2:
        per_sample *= 2
    total = per_sample * samples
    path = circle_path(0, radius, theta, total)
    fiber = curve.solve_fiber(path[0])
    tracker = Tracker(curve, **options)
    tracked = tracker.track(path, fiber.roots)
    permutation = match_roots(tracked.roots, fiber.roots, fiber.min_separation)
    indices = range(0, total, per_sample)
    sample_angles = [theta + 2 * math.pi * k / total for k in indices]
    sample_roots = [tracked.vertex_roots[k] for k in indices]
    return CircleTracking(radius, theta, fiber, permutation, sample_angles, sample_roots,
                          tracked.vertex_roots[total // 2], tracker.max_residual)


def monodromy_at_infinity(n, radius, curve=None, theta=0.0, check_doubling=True,
                          max_period=DEFAULT_MAX_PERIOD, branch=None, **options):
    """Permutation of the fiber over radius * e^(i theta) along |a| = radius.

    :raises UnstableAtInfinity: the circle of twice the radius gives another cycle type.
    """
    if curve is None:
        curve = NumericCurve.for_period(n, max_period=max_period)
    if branch is None:
        branch = branch_locus(n, curve=curve)
    if branch.points and radius <= 2 * branch.radius:
        raise DomainError(message='radius {} does not exceed twice the largest branch '
                                  'point modulus {}'.format(radius, branch.radius))
    first = track_circle(curve, radius, theta, **options)
    if check_doubling:
        second = track_circle(curve, 2 * radius, theta, **options)
        if first.permutation.cycle_type() != second.permutation.cycle_type():
            raise UnstableAtInfinity(first=first.permutation.cycle_type(),
                                     second=second.permutation.cycle_type())
    return first.permutation


# The involution (a, v) -> (-a, -v)

class InvolutionPairing(object):
    """How I(a, v) = (-a, -v) acts on the fiber over a0.

    deck[j] = k when the root v_j over a0 continues along the half circle
    to -a0 and ends on -v_k, the image of v_k under I.  mirror sends the
    labels over a0 to the labels of the separately solved fiber over -a0,
    v -> -v, and mirror_back sends them back; I is an involution exactly
    when mirror then mirror_back is the identity.  symmetric_fixed lists the
    roots over a = 0, where I acts on one fiber, fixed by v -> -v: the only
    points of the curve I can fix.
    """

    def __init__(self, fiber, deck, full_circle, mirror, mirror_back, symmetric_fixed):
        self.fiber = fiber
        self.deck = deck
        self.full_circle = full_circle
        self.mirror = mirror
        self.mirror_back = mirror_back
        self.symmetric_fixed = symmetric_fixed

    @property
    def square(self):
        return self.mirror.then(self.mirror_back)

    @property
    def consistent(self):
        return self.square.is_identity and self.deck.then(self.deck) == self.full_circle


def _match_bidirectional(tracked, partners):
    forward = match_roots(tracked, partners)
    backward = match_roots(partners, tracked)
    if backward != forward.inverse():
        raise MatchingError(reason='involution matching is not symmetric')
    return forward


def symmetric_fiber(curve, tol=1e-8):
    """Fiber over a = 0, its permutation under v -> -v and the labels it fixes."""
    fiber = curve.solve_fiber(0)
    flip = match_roots(-fiber.roots, fiber.roots, fiber.min_separation)
    fixed = [j for j in range(len(fiber)) if flip(j) == j and abs(fiber.roots[j]) < tol]
    return fiber, flip, fixed


def involution_pairing(curve, fiber, circle_points=CIRCLE_POINTS, tol=1e-8, **options):
    options = tracking_options(**options)
    if fiber.base == 0:
        raise DomainError(message='the involution fixes the fiber over a = 0')
    radius, theta = abs(fiber.base), cmath.phase(fiber.base)
    tracker = Tracker(curve, **options)
    half = circle_path(0, radius, theta, circle_points, turns=0.5)
    half[-1] = -fiber.base
    tracked = tracker.track(half, fiber.roots)
    partners = -fiber.roots
    if len(partners) and np.max(curve.residuals(-fiber.base, partners)) >= tracker.residual_tol:
        raise ConsistencyError(message='Phi_n is not invariant under (a, v) -> (-a, -v)')
    deck = _match_bidirectional(tracked.roots, partners)
    _, full_circle = track_fiber(curve, circle_path(0, radius, theta, 2 * circle_points),
                                 fiber, tracker=Tracker(curve, **options))

    opposite = curve.solve_fiber(-fiber.base)
    mirror = match_roots(-fiber.roots, opposite.roots, opposite.min_separation)
    mirror_back = match_roots(-opposite.roots, fiber.roots, fiber.min_separation)
    _, _, symmetric_fixed = symmetric_fiber(curve, tol)
    return InvolutionPairing(fiber, deck, full_circle, mirror, mirror_back, symmetric_fixed)


def involution_on_fiber(curve, fiber, **options):
    """The deck permutation of the involution on the labelled fiber."""
    return involution_pairing(curve, fiber, **options).deck


# Smoothness

class SmoothnessReport(object):

    def __init__(self, n, points_checked, min_gradient, degenerate, ambiguous):
        self.n = n
        self.points_checked = points_checked
        self.min_gradient = min_gradient
        self.degenerate = degenerate
        self.ambiguous = ambiguous

    @property
    def smooth(self):
        return self.min_gradient > 1e-6

    def as_dict(self):
        return {'n': self.n, 'points_checked': self.points_checked,
                'min_gradient': self.min_gradient, 'smooth': self.smooth,
                'degenerate': [list(p) for p in self.degenerate],
                'ambiguous': self.ambiguous}


def smoothness_spot_check(n, count=200, seed=0, curve=None, radius=2.0,
                          max_period=DEFAULT_MAX_PERIOD):
    """Normalised gradients of Phi_n at random points of the curve.

    Points where +a has an exact period smaller than n are reported as degenerate.
    """
    if curve is None:
        curve = NumericCurve.for_period(n, max_period=max_period)
    rng = np.random.default_rng(seed)
    degree = max(curve.degree, 1)
    fibers = int(math.ceil(count / float(degree)))
    checked, min_gradient = 0, math.inf
    degenerate, ambiguous = [], 0
    for _ in range(fibers):
        a = complex(radius * math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform()))
        fiber = curve.solve_fiber(a)
        gradients = curve.numeric.gradient_norm(a, fiber.roots)
        min_gradient = min(min_gradient, float(np.min(gradients)))
        checked += len(fiber)
        for v in fiber.roots:
            try:
                period = dynamics.exact_period(dynamics.CubicMap(a, v), n, tol=1e-8,
                                               relative=True)
            except AmbiguousPeriod:
                ambiguous += 1
                continue
            if period is not None and period < n:
                degenerate.append((a, complex(v)))
                DegenerateParameterEvent(n, a=a, v=complex(v), period=period).send()
    return SmoothnessReport(n, checked, min_gradient, degenerate, ambiguous)
