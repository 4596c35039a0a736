"""Escape regions of S_n near infinity and their kneading words.

The fiber over a = R is continued once around |a| = R; each cycle of the
resulting permutation is a branch of the curve at infinity, i.e. one escape
region.  Every region is sampled along its cycle, the samples are polished
onto the curve, classified and given a kneading word, and the word must be
the same at every sample.
"""
import cmath
import math
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from . import dynamics
from . import kneading
from . import monodromy
from .events import RadiusDoubledEvent, RegionClassifiedEvent
from .monodromy import as_complex
from .errors import (AmbiguousPeriod, ConsistencyError, ConstancyViolation,
                     DomainError, KneadingUnresolved, MatchingError,
                     UnstableAtInfinity)


RADIUS_FACTOR = 4.0
SAMPLES = 8
DOUBLINGS = 3
RING_POINTS = 64
MAX_RING_POINTS = 1 << 14


def _word_or_none(text):
    return None if text is None else kneading.KneadingWord.from_string(text)


class SampleResult(object):
    """One polished point (a, v) of the curve with its classification.

    problem is None when the sample was classified and given a word;
    refined_word is its word again on the finer grid of KneadingSettings.refined().
    """

    def __init__(self, region_id, label, angle, a, v, escape_class, period=None,
                 word=None, problem=None, refined_word=None):
        self.region_id = region_id
        self.label = label
        self.angle = angle
        self.a = a
        self.v = v
        self.escape_class = escape_class
        self.period = period
        self.word = word
        self.problem = problem
        self.refined_word = refined_word

    @property
    def resolved(self):
        return self.problem is None

    def as_dict(self):
        return {'region': self.region_id, 'label': self.label, 'angle': self.angle,
                'a': self.a, 'v': self.v, 'escape': self.escape_class.value,
                'period': self.period,
                'word': None if self.word is None else str(self.word),
                'refined_word': None if self.refined_word is None else str(self.refined_word),
                'problem': self.problem}

    @classmethod
    def from_dict(cls, data):
        word, refined = (_word_or_none(data.get(key)) for key in ('word', 'refined_word'))
        return cls(data['region'], data['label'], data['angle'], as_complex(data['a']),
                   as_complex(data['v']), dynamics.EscapeClass(data['escape']),
                   data['period'], word, data['problem'], refined)


class KneadingSettings(object):

    def __init__(self, tol=dynamics.DEFAULT_TOL, budget=dynamics.DEFAULT_BUDGET,
                 resolution=kneading.DEFAULT_RESOLUTION,
                 max_resolution=kneading.MAX_RESOLUTION,
                 margin_fraction=kneading.DEFAULT_MARGIN_FRACTION):
        self.tol = tol
        self.budget = budget
        self.resolution = int(resolution)
        self.max_resolution = int(max_resolution)
        self.margin_fraction = margin_fraction

    def refined(self):
        """Twice the resolution and half the margin, for the independent recheck."""
        return KneadingSettings(self.tol, self.budget, 2 * self.resolution,
                                max(2 * self.resolution, 2 * self.max_resolution),
                                self.margin_fraction / 2)

    def as_dict(self):
        return {'tol': self.tol, 'budget': self.budget, 'resolution': self.resolution,
                'max_resolution': self.max_resolution,
                'margin_fraction': self.margin_fraction}


def polish_sample(n, a, v, settings):
    v = dynamics.refine_parameter(a, v, n)
    cubic = dynamics.CubicMap(a, v)
    return cubic, dynamics.classify_escape(cubic, tol=settings.tol, budget=settings.budget)


def sample_word(n, cubic, settings):
    """Exact period check, then the kneading word at margin_fraction * g(-a).

    :returns: (period, word or None, problem or None)
    """
    try:
        period = dynamics.exact_period(cubic, n, relative=True)
    except AmbiguousPeriod as e:
        return None, None, str(e)
    if period != n:
        return period, None, 'exact period {} instead of {}'.format(period, n)
    escape = dynamics.green(cubic, -cubic.a, tol=settings.tol, budget=settings.budget)
    try:
        word = kneading.kneading_word(
            cubic, n, margin=settings.margin_fraction * escape.value,
            resolution=settings.resolution, max_resolution=settings.max_resolution,
            check_period=False, tol=settings.tol, budget=settings.budget)
    except KneadingUnresolved as e:
        return period, None, str(e)
    return period, word, None


class EscapeRegionRecord(object):
    """One cycle of the monodromy at infinity."""

    def __init__(self, region_id, labels, representative, kneading_word, samples_checked,
                 partner=None, problems=()):
        self.region_id = region_id
        self.labels = list(labels)
        self.representative = representative
        self.kneading = kneading_word
        self.samples_checked = samples_checked
        self.partner = partner
        self.problems = list(problems)

    @property
    def cycle_length(self):
        return len(self.labels)

    @property
    def unresolved(self):
        return self.kneading is None

    @property
    def is_distinguished(self):
        return self.kneading is not None and self.kneading.is_distinguished

    @property
    def flip_path(self):
        if self.kneading is None:
            return None
        return kneading.flip_path_to_distinguished(self.kneading)

    @property
    def flip_walk(self):
        if self.kneading is None:
            return None
        return [str(w) for w in kneading.flip_walk(self.kneading)]

    def as_dict(self):
        return {
            'region_id': self.region_id,
            'labels': self.labels,
            'cycle_length': self.cycle_length,
            'representative': list(self.representative),
            'kneading': None if self.kneading is None else str(self.kneading),
            'unresolved': self.unresolved,
            'samples_checked': self.samples_checked,
            'partner': self.partner,
            'flip_path': self.flip_path,
            'flip_walk': self.flip_walk,
            'problems': self.problems,
        }

    @classmethod
    def from_dict(cls, data):
        word = data['kneading']
        a, v = data['representative']
        return cls(data['region_id'], data['labels'], (as_complex(a), as_complex(v)),
                   None if word is None else kneading.KneadingWord.from_string(word),
                   data['samples_checked'], data['partner'], data['problems'])


class AtlasReport(object):

    def __init__(self, n, degree, branch_count, radius, infinity, regions, samples,
                 seed=0, tolerances=None, orbit_count=None, timings=None,
                 region_clusters=None):
        self.n = n
        self.degree = degree
        self.branch_count = branch_count
        self.radius = radius
        self.infinity = infinity
        self.regions = regions
        self.samples = samples
        self.seed = seed
        self.tolerances = tolerances or {}
        self.orbit_count = orbit_count
        self.timings = timings or {}
        self.region_clusters = region_clusters

    @property
    def infinity_cycle_type(self):
        return self.infinity.cycle_type()

    @property
    def consistent(self):
        """Whether the separately clustered escape regions are the cycles at
        infinity; None when the clustering did not settle."""
        if self.region_clusters is None:
            return None
        cycles = sorted(sorted(c) for c in self.infinity.cycles())
        return cycles == sorted(sorted(c) for c in self.region_clusters)

    def region(self, region_id):
        return self.regions[region_id]

    def quotient_regions(self):
        """Regions grouped by the involution (a, v) -> (-a, -v)."""
        classes = set()
        for record in self.regions:
            partner = record.region_id if record.partner is None else record.partner
            classes.add(tuple(sorted({record.region_id, partner})))
        return sorted(classes)

    def distinguished_regions(self):
        return [r.region_id for r in self.regions if r.is_distinguished]

    def distinguished_classes(self):
        return [c for c in self.quotient_regions()
                if any(self.regions[i].is_distinguished for i in c)]

    @property
    def unresolved_regions(self):
        return [r.region_id for r in self.regions if r.unresolved]

    def realized_words(self):
        return sorted({str(r.kneading) for r in self.regions if r.kneading is not None})

    def unrealized_words(self):
        realized = set(self.realized_words())
        return [str(w) for w in kneading.admissible_words(self.n) if str(w) not in realized]

    def as_dict(self, include_timings=False):
        data = {
            'n': self.n,
            'degree_v': self.degree,
            'branch_point_count': self.branch_count,
            'orbit_count': self.orbit_count,
            'radius': self.radius,
            'infinity': self.infinity.cycle_notation(),
            'infinity_cycle_type': list(self.infinity_cycle_type),
            'region_count': len(self.regions),
            'quotient_region_count': len(self.quotient_regions()),
            'quotient_regions': [list(c) for c in self.quotient_regions()],
            'regions': [r.as_dict() for r in self.regions],
            'distinguished_regions': self.distinguished_regions(),
            'realized_words': self.realized_words(),
            'unrealized_words': self.unrealized_words(),
            'unresolved_regions': self.unresolved_regions,
            'samples': [s.as_dict() for s in self.samples],
            'seed': self.seed,
            'tolerances': dict(self.tolerances),
            'region_clusters': self.region_clusters,
            'regions_confirmed': self.consistent,
        }
        if include_timings:
            data['timings'] = dict(self.timings)
        return data

    @classmethod
    def from_dict(cls, data):
        infinity = monodromy.Permutation.from_cycle_notation(data['infinity'], data['degree_v'])
        return cls(data['n'], data['degree_v'], data['branch_point_count'], data['radius'],
                   infinity, [EscapeRegionRecord.from_dict(r) for r in data['regions']],
                   [SampleResult.from_dict(s) for s in data['samples']],
                   data['seed'], data['tolerances'], data['orbit_count'],
                   data.get('timings'), data.get('region_clusters'))


def _map(function, items, workers):
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(function, items))
    return [function(item) for item in items]


def _escaping_circle(n, curve, radius, samples, doublings, settings, tracking):
    """Circle tracking at a radius where every sample escapes, doubling at most doublings times."""
    for attempt in range(doublings + 1):
        circle = monodromy.track_circle(curve, radius, 0.0, samples=samples, **tracking)
        polished = {}
        escaping = True
        for label in range(curve.degree):
            for k, (a, v) in enumerate(circle.samples(label)):
                cubic, escape = polish_sample(n, a, v, settings)
                polished[(label, k)] = (cubic, escape)
                escaping = escaping and escape is dynamics.EscapeClass.ESCAPE_LOCUS
        if escaping or attempt == doublings:
            return circle, polished
        RadiusDoubledEvent(n, radius=radius).send()
        radius *= 2


class _RingFibers(object):
    """Fibers over a = radius * e^(2 pi i k / points), solved each on its own.

    Nodes are kept across doublings of points, keyed by the angle as a
    fraction of the finest grid.
    """

    def __init__(self, n, curve, radius, settings, finest):
        self.n = n
        self.curve = curve
        self.radius = radius
        self.settings = settings
        self.finest = finest
        self._nodes = {}

    def node(self, k, points):
        key = k * (self.finest // points) % self.finest
        if key not in self._nodes:
            a = self.radius * cmath.exp(2j * math.pi * key / self.finest)
            fiber = self.curve.solve_fiber(a)
            escaping = [dynamics.classify_escape(dynamics.CubicMap(a, v), tol=self.settings.tol,
                                                 budget=self.settings.budget)
                        is dynamics.EscapeClass.ESCAPE_LOCUS for v in fiber.roots]
            self._nodes[key] = (fiber, escaping)
        return self._nodes[key]


def _ring_partition(ring, points):
    degree = ring.curve.degree
    rows, columns = [], []
    for k in range(points):
        here, here_escaping = ring.node(k, points)
        there, there_escaping = ring.node(k + 1, points)
        slope = dynamics.parameter_slope(here.base, here.roots, ring.n)
        predicted = here.roots + slope * (there.base - here.base)
        try:
            link = monodromy.match_roots(predicted, there.roots, there.min_separation)
        except MatchingError:
            return None
        for i in range(degree):
            j = link(i)
            if here_escaping[i] and there_escaping[j]:
                rows.append(k * degree + i)
                columns.append(((k + 1) % points) * degree + j)
    size = points * degree
    graph = csr_matrix((np.ones(len(rows)), (rows, columns)), shape=(size, size))
    _, components = connected_components(graph, directed=False)
    clusters = {}
    for label in range(degree):
        clusters.setdefault(components[label], []).append(label)
    return sorted(clusters.values())


def escape_region_clusters(n, curve, radius, settings=None, points=RING_POINTS,
                           max_points=MAX_RING_POINTS):
    """Escape regions met by |a| = radius, found without continuation.

    Fibers are solved separately at equally spaced angles; roots over
    neighbouring angles are linked when the first order prediction along
    the curve lands within a third of the gap of a single root, and only
    escaping points are linked.  The labels over a = radius fall into the
    components of that graph.  The number of angles doubles until every
    link is unambiguous.

    :returns: sorted label lists, or None when max_points angles do not suffice.
    """
    settings = settings or KneadingSettings()
    ring = _RingFibers(n, curve, radius, settings, max_points)
    while points <= max_points:
        partition = _ring_partition(ring, points)
        if partition is not None:
            return partition
        points *= 2
    return None


def build_atlas(n, seed=0, radius=None, curve=None, components=None,
                radius_factor=RADIUS_FACTOR, samples=SAMPLES, doublings=DOUBLINGS,
                settings=None, workers=1, max_period=monodromy.DEFAULT_MAX_PERIOD,
                check_doubling=True, check_clusters=True, recheck=True, **tracking):
    """Enumerate the escape regions of S_n with their kneading words.

    :param components: a MonodromyResult for n, reused for the branch points
        and reported orbit count.
    :param recheck: classify every resolved sample again on the refined grid.
    :raises ConstancyViolation: two samples of one region, or a region and its
        image under the involution, have different words.
    :raises ConsistencyError: the escape regions clustered from separately
        solved fibers on the circle are not the cycles at infinity.
    """
    if n < 2:
        raise DomainError(message='kneading words need period at least 2, got {}'.format(n))
    settings = settings or KneadingSettings()
    timings = {}
    start = time.perf_counter()
    if curve is None:
        curve = monodromy.NumericCurve.for_period(n, max_period=max_period)
    branch = components.branch if components is not None else \
        monodromy.branch_locus(n, curve=curve)
    timings['branch_points'] = time.perf_counter() - start

    if radius is None:
        radius = radius_factor * (1.0 + branch.radius)
    if branch.points and radius <= 2 * branch.radius:
        raise DomainError(message='radius {} does not exceed twice the largest branch '
                                  'point modulus {}'.format(radius, branch.radius))
    start = time.perf_counter()
    circle, polished = _escaping_circle(n, curve, radius, samples, doublings, settings,
                                        tracking)
    radius = circle.radius
    infinity = circle.permutation
    if check_doubling:
        second = monodromy.track_circle(curve, 2 * radius, 0.0, samples=samples, **tracking)
        if second.permutation.cycle_type() != infinity.cycle_type():
            raise UnstableAtInfinity(first=infinity.cycle_type(),
                                     second=second.permutation.cycle_type())
    timings['infinity'] = time.perf_counter() - start

    clusters = None
    if check_clusters:
        start = time.perf_counter()
        clusters = escape_region_clusters(n, curve, radius, settings)
        timings['clusters'] = time.perf_counter() - start

    start = time.perf_counter()
    cycles = infinity.cycles()
    region_of = {}
    for region_id, cycle in enumerate(cycles):
        for label in cycle:
            region_of[label] = region_id

    jobs = []
    for label in range(curve.degree):
        for k, angle in enumerate(circle.sample_angles):
            jobs.append((region_of[label], label, k, angle))

    def classify(job):
        region_id, label, k, angle = job
        cubic, escape = polished[(label, k)]
        if escape is not dynamics.EscapeClass.ESCAPE_LOCUS:
            return SampleResult(region_id, label, angle, cubic.a, cubic.v, escape,
                                problem='classified {}'.format(escape.value))
        period, word, problem = sample_word(n, cubic, settings)
        refined = None
        if word is not None and recheck:
            _, refined, _ = sample_word(n, cubic, settings.refined())
        return SampleResult(region_id, label, angle, cubic.a, cubic.v, escape, period,
                            word, problem, refined)

    results = _map(classify, jobs, workers)
    timings['kneading'] = time.perf_counter() - start

    start = time.perf_counter()
    partner_labels = circle.involution_labels()
    regions = []
    for region_id, cycle in enumerate(cycles):
        mine = [s for s in results if s.region_id == region_id]
        words = sorted({str(s.word) for s in mine if s.word is not None})
        if len(words) > 1:
            raise ConstancyViolation(region=region_id, words=', '.join(words))
        representative = next(s for s in mine if s.label == cycle[0] and s.angle == 0.0)
        word = kneading.KneadingWord.from_string(words[0]) if words else None
        problems = sorted({s.problem for s in mine if s.problem is not None})
        for s in mine:
            if s.refined_word is not None and s.refined_word != s.word:
                detail = '{}, {} (refined grid, label {})'.format(s.word, s.refined_word, s.label)
                raise ConstancyViolation(region=region_id, words=detail)
        record = EscapeRegionRecord(region_id, cycle, (representative.a, representative.v),
                                    word, len(mine), region_of[partner_labels(cycle[0])],
                                    problems)
        RegionClassifiedEvent(n, region=region_id, word=word or 'unresolved',
                              samples=len(mine)).send()
        regions.append(record)

    for record in regions:
        partner = regions[record.partner]
        if (record.kneading is not None and partner.kneading is not None
                and record.kneading != partner.kneading):
            raise ConstancyViolation(region=record.region_id,
                                     words='{}, {} (involution partner)'.format(
                                         record.kneading, partner.kneading))
    timings['regions'] = time.perf_counter() - start

    tolerances = dict(settings.as_dict(), samples=samples, radius_factor=radius_factor,
                      circle_points=tracking.get('circle_points', monodromy.CIRCLE_POINTS),
                      **monodromy.tracking_options(**tracking))
    report = AtlasReport(n, curve.degree, len(branch.points), radius, infinity, regions,
                         results, seed=seed, tolerances=tolerances,
                         orbit_count=None if components is None else components.orbit_count,
                         timings=timings, region_clusters=clusters)
    if report.consistent is False:
        raise ConsistencyError(message='period {}: escape regions {} on the circle, cycles {} '
                                       'at infinity'.format(n, clusters,
                                                            infinity.cycle_notation()))
    check_distinguished(report)
    return report


def check_distinguished(report):
    """Exactly one class of regions under the involution has the word 1^(n-1)0.

    With unresolved regions a missing distinguished class is not an error.
    """
    classes = report.distinguished_classes()
    if len(classes) > 1 or (not classes and not report.unresolved_regions):
        raise ConsistencyError(message='period {}: {} classes of escape regions carry the '
                                       'distinguished word'.format(report.n, len(classes)))
    return classes[0] if classes else None


def plot_rows(report):
    """Fiber samples as CSV rows, coloured by the kneading word of their region."""
    words = {r.region_id: ('' if r.kneading is None else str(r.kneading)) for r in report.regions}
    rows = []
    for s in report.samples:
        rows.append([s.region_id, s.label, repr(s.angle), repr(s.a.real), repr(s.a.imag),
                     repr(s.v.real), repr(s.v.imag), words[s.region_id]])
    return rows


PLOT_HEADER = ['region', 'label', 'angle', 'a_re', 'a_im', 'v_re', 'v_im', 'word']
