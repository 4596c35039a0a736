"""Kneading words of escape-locus parameters and their twist flips.

For an escaping parameter the sublevel set {g < g(-a)} is the union of two
Jordan domains D0 (containing +a) and D1 (containing the co-critical point
-2a), touching at -a.  The kneading word records which one each point of the
critical orbit visits:

    kappa_j = i  iff  f^j(a) lies in D_i,   j = 1..n,

so that kappa_n = 0 always.  Membership is decided on a grid: cells below
g(-a) - margin are labelled by connectivity (scipy.ndimage.label, four
neighbours) and compared with the cells of the two anchors.
"""
import enum
import itertools

import numpy as np
from scipy import ndimage

from . import dynamics
from .errors import (ConsistencyError, DomainError, KneadingUnresolved,
                     LeakageError)


DEFAULT_RESOLUTION = 512
MAX_RESOLUTION = 4096
DEFAULT_MARGIN_FRACTION = 0.1
WINDOW_FACTOR = 1.5


class KneadingWord(object):
    """Binary word kappa_1 ... kappa_n with kappa_n = 0."""

    __slots__ = ('symbols',)

    def __init__(self, symbols):
        symbols = tuple(int(s) for s in symbols)
        if len(symbols) < 2:
            raise DomainError(message='kneading words have length at least 2')
        if any(s not in (0, 1) for s in symbols):
            raise DomainError(message='kneading symbols are 0 or 1: {}'.format(symbols))
        if symbols[-1] != 0:
            raise DomainError(message='the last kneading symbol is always 0')
        self.symbols = symbols

    @classmethod
    def from_string(cls, text):
        text = text.strip()
        if not text or set(text) - set('01'):
            raise DomainError(message='not a binary word: {!r}'.format(text))
        return cls(int(s) for s in text)

    def __str__(self):
        return ''.join(str(s) for s in self.symbols)

    def __repr__(self):
        return 'KneadingWord({!r})'.format(str(self))

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __eq__(self, other):
        return isinstance(other, KneadingWord) and self.symbols == other.symbols

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.symbols)

    def __lt__(self, other):
        return self.symbols < other.symbols

    @property
    def n(self):
        return len(self.symbols)

    def symbol(self, j):
        """kappa_j, 1-based."""
        if not 1 <= j <= self.n:
            raise DomainError(message='position {} outside 1..{}'.format(j, self.n))
        return self.symbols[j - 1]

    def zero_count(self):
        """Zeros among kappa_1 ... kappa_(n-1)."""
        return self.symbols[:-1].count(0)

    def hamming_to(self, other):
        if self.n != other.n:
            raise DomainError(message='words of different lengths')
        return sum(x != y for x, y in zip(self.symbols, other.symbols))

    @property
    def is_distinguished(self):
        return self == distinguished_word(self.n)


def admissible_words(n):
    """All 2^(n-1) words of length n ending in 0."""
    return [KneadingWord(bits + (0,)) for bits in itertools.product((0, 1), repeat=n - 1)]


def twist_flip(word, m):
    """Flip kappa_m, 1 <= m <= n-1."""
    if not 1 <= m <= word.n - 1:
        raise DomainError(message='cannot flip position {} of a word of length {}; '
                                  'kappa_n is pinned to 0'.format(m, word.n))
    symbols = list(word.symbols)
    symbols[m - 1] = 1 - symbols[m - 1]
    return KneadingWord(symbols)


def distinguished_word(n):
    """The word 1^(n-1) 0."""
    if n < 2:
        raise DomainError(message='kneading words have length at least 2')
    return KneadingWord([1] * (n - 1) + [0])


def flip_path_to_distinguished(word):
    """Positions m < n with kappa_m = 0, left to right."""
    return [m for m in range(1, word.n) if word.symbol(m) == 0]


def flip_walk(word):
    """The words met when applying flip_path_to_distinguished, word included.

    Each flip changes one symbol, so the walk is as long as the Hamming
    distance to the distinguished word.
    """
    words = [word]
    for m in flip_path_to_distinguished(word):
        words.append(twist_flip(words[-1], m))
    target = distinguished_word(word.n)
    if words[-1] != target or len(words) - 1 != word.hamming_to(target):
        raise ConsistencyError(message='flips from {} end on {} after {} steps'.format(
            word, words[-1], len(words) - 1))
    return words


class ComponentLabel(enum.Enum):
    D0 = 'D0'
    D1 = 'D1'
    OUTSIDE = 'outside'
    INDETERMINATE = 'indeterminate'


class ComponentGrid(object):
    """Labelled sublevel set {g < g(-a) - margin} of one escaping map.

    The square window is centred at 0 and starts at 1.5 times the largest of
    2|a| and the moduli of the points of interest; it doubles, up to the escape
    radius, while the sublevel set touches its border.
    """

    def __init__(self, cubic, margin=None, resolution=DEFAULT_RESOLUTION, points=(),
                 tol=dynamics.DEFAULT_TOL, budget=dynamics.DEFAULT_BUDGET):
        self.cubic = cubic
        self.tol, self.budget = tol, budget
        self.escape_green = dynamics.green(cubic, -cubic.a, tol=tol, budget=budget)
        if not (self.escape_green.escaped and self.escape_green.lower > 0):
            raise DomainError(message='{} is not in the escape locus'.format(cubic))
        if margin is None:
            margin = DEFAULT_MARGIN_FRACTION * self.escape_green.value
        if not 0 < margin < self.escape_green.value:
            raise DomainError(message='margin must lie in (0, g(-a))')
        self.margin = margin
        self.threshold = self.escape_green.value - margin
        self.resolution = int(resolution)

        anchors = [cubic.a, -2 * cubic.a]
        extent = max([2 * abs(cubic.a)] + [abs(p) for p in points] + [1e-6])
        self.half_width = min(WINDOW_FACTOR * extent, cubic.escape_radius)
        while True:
            self._label()
            if not self._touches_border() or self.half_width >= cubic.escape_radius:
                break
            self.half_width = min(2 * self.half_width, cubic.escape_radius)

        self.anchor_labels = [self._label_at(p) for p in anchors]
        if self.anchor_labels[0] and self.anchor_labels[0] == self.anchor_labels[1]:
            raise LeakageError(point=anchors[0], resolution=self.resolution)

    def _label(self):
        step = 2 * self.half_width / self.resolution
        axis = -self.half_width + (np.arange(self.resolution) + 0.5) * step
        grid = axis[None, :] + 1j * axis[:, None]
        values = dynamics.green_grid(self.cubic, grid, self.threshold)
        self.mask = values < self.threshold
        self.labels, self.count = ndimage.label(self.mask)

    def _touches_border(self):
        m = self.mask
        return bool(m[0, :].any() or m[-1, :].any() or m[:, 0].any() or m[:, -1].any())

    def cell(self, w):
        """(row, column) of the cell containing w, or None outside the window."""
        step = 2 * self.half_width / self.resolution
        column = int(np.floor((w.real + self.half_width) / step))
        row = int(np.floor((w.imag + self.half_width) / step))
        if 0 <= row < self.resolution and 0 <= column < self.resolution:
            return row, column
        return None

    def _label_at(self, w):
        cell = self.cell(complex(w))
        if cell is None:
            return 0
        return int(self.labels[cell])

    def locate(self, w):
        w = complex(w)
        g = dynamics.green(self.cubic, w, tol=self.tol, budget=self.budget)
        if g.value >= self.threshold:
            return ComponentLabel.OUTSIDE
        label = self._label_at(w)
        if label == 0:
            return ComponentLabel.INDETERMINATE
        if label == self.anchor_labels[0]:
            return ComponentLabel.D0
        if label == self.anchor_labels[1]:
            return ComponentLabel.D1
        return ComponentLabel.INDETERMINATE


def locate_component(cubic, w, margin=None, resolution=DEFAULT_RESOLUTION, **kwargs):
    """D0, D1, Outside or Indeterminate for one point w."""
    grid = ComponentGrid(cubic, margin=margin, resolution=resolution, points=[w], **kwargs)
    return grid.locate(w)


def kneading_word(cubic, n, margin=None, resolution=DEFAULT_RESOLUTION,
                  max_resolution=MAX_RESOLUTION, check_period=True, **kwargs):
    """Kneading word of an escaping map whose marked point +a has period n.

    The grid resolution doubles while some symbol is Indeterminate.

    :raises KneadingUnresolved: still Indeterminate at max_resolution.
    """
    if n < 2:
        raise DomainError(message='kneading words have length at least 2')
    if check_period:
        period = dynamics.exact_period(cubic, n, relative=True)
        if period != n:
            raise DomainError(message='+a has period {} instead of {} for {}'.format(
                period, n, cubic))
    points = dynamics.orbit(cubic, cubic.a, n)[1:]
    resolution = int(resolution)
    while True:
        grid = ComponentGrid(cubic, margin=margin, resolution=resolution,
                             points=points, **kwargs)
        labels = [grid.locate(p) for p in points]
        unresolved = [j for j, label in enumerate(labels, 1)
                      if label not in (ComponentLabel.D0, ComponentLabel.D1)]
        if not unresolved:
            break
        if resolution * 2 > max_resolution:
            raise KneadingUnresolved(index=unresolved[0], resolution=resolution)
        resolution *= 2
    symbols = [0 if label is ComponentLabel.D0 else 1 for label in labels]
    if symbols[-1] != 0:
        raise ConsistencyError(message='f^n(a) located in D1 for {}'.format(cubic))
    return KneadingWord(symbols)
