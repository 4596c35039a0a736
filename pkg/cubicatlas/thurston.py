"""Transition matrices of cyclic multicurves and their leading eigenvalues.

A candidate obstruction for a map of the escape locus is described by a
partition of the periodic critical orbit c, f(c), ..., f^(n-1)(c) into p
blocks permuted cyclically by f.  The block containing c maps over the next
one with degree 2, all the others with degree 1, so the transition matrix has
one entry 1/2 and p - 1 entries 1 on its cyclic diagonal; its leading
eigenvalue is 2^(-1/p) < 1 and no such candidate is an obstruction.
"""
import re
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import DomainError


OBSTRUCTION_TOL = 1e-9
RAYLEIGH_TOL = 1e-12
MAX_POWER_ITERATIONS = 100000


class CyclicBlockPartition(object):
    """Blocks of orbit indices {0..n-1}, with the shift i -> i+1 mod n mapping
    block k onto block k+1 mod p."""

    _pattern = re.compile(r'^\s*n=(\d+)\s+p=(\d+)\s+critical=(\d+)\s*$')

    def __init__(self, n, blocks):
        blocks = [tuple(sorted(int(i) for i in b)) for b in blocks]
        self.n, self.p = int(n), len(blocks)
        self.blocks = blocks
        self._check()
        self.critical_block = next(k for k, b in enumerate(blocks) if 0 in b)

    @classmethod
    def canonical(cls, n, p):
        """Blocks {i : i = r mod p}, r = 0..p-1; c lies in block 0."""
        if p < 1 or n % p or n // p < 2:
            raise DomainError(message='no cyclic partition of {} points into {} blocks '
                                      'of at least two'.format(n, p))
        return cls(n, [range(r, n, p) for r in range(p)])

    @classmethod
    def from_string(cls, text):
        match = cls._pattern.match(text)
        if match is None:
            raise DomainError(message='cannot parse partition {!r}'.format(text))
        n, p, critical = (int(x) for x in match.groups())
        partition = cls.canonical(n, p)
        if critical != partition.critical_block:
            raise DomainError(message='canonical partitions have critical block 0')
        return partition

    def _check(self):
        if self.n < 2:
            raise DomainError(message='the orbit has at least two points')
        flat = sorted(i for b in self.blocks for i in b)
        if flat != list(range(self.n)):
            raise DomainError(message='blocks do not partition 0..{}'.format(self.n - 1))
        if any(len(b) < 2 for b in self.blocks):
            raise DomainError(message='peripheral block (fewer than two orbit points)')
        for k, block in enumerate(self.blocks):
            image = tuple(sorted((i + 1) % self.n for i in block))
            if image != self.blocks[(k + 1) % self.p]:
                raise DomainError(message='the shift does not map block {} onto block {}'
                                  .format(k, (k + 1) % self.p))

    def __eq__(self, other):
        return (isinstance(other, CyclicBlockPartition)
                and self.n == other.n and self.blocks == other.blocks)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, tuple(self.blocks)))

    def __str__(self):
        return 'n={} p={} critical={}'.format(self.n, self.p, self.critical_block)

    def __repr__(self):
        return 'CyclicBlockPartition({})'.format(self)


class TransitionMatrix(object):
    """Square matrix of non-negative rationals."""

    def __init__(self, entries):
        entries = [[Fraction(x) for x in row] for row in entries]
        if any(len(row) != len(entries) for row in entries):
            raise DomainError(message='transition matrices are square')
        if any(x < 0 for row in entries for x in row):
            raise DomainError(message='transition matrices are non-negative')
        self.entries = entries

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, TransitionMatrix) and self.entries == other.entries

    def __ne__(self, other):
        return not self == other

    def to_array(self):
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float)

    def row_sums(self):
        return [sum(row, Fraction(0)) for row in self.entries]

    def serialize(self):
        """Row-major lists of strings, '1/2', '1', '0'."""
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def deserialize(cls, rows):
        return cls([[Fraction(x) for x in row] for row in rows])

    def __repr__(self):
        return 'TransitionMatrix({})'.format(self.serialize())


def enumerate_partitions(n):
    """One canonical partition for each p | n with n / p >= 2."""
    if n < 2:
        raise DomainError(message='period must be at least 2, got {}'.format(n))
    return [CyclicBlockPartition.canonical(n, p)
            for p in range(1, n // 2 + 1) if n % p == 0]


def transition_matrix(partition):
    p = partition.p
    entries = [[Fraction(0)] * p for _ in range(p)]
    for k in range(p):
        degree = 2 if k == partition.critical_block else 1
        entries[k][(k + 1) % p] += Fraction(1, degree)
    return TransitionMatrix(entries)


def _as_array(matrix):
    if isinstance(matrix, TransitionMatrix):
        return matrix.to_array()
    array = np.array([[float(x) for x in row] for row in matrix], dtype=float) \
        if not isinstance(matrix, np.ndarray) else matrix.astype(float)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise DomainError(message='expected a square matrix, got shape {}'.format(array.shape))
    if (array < 0).any():
        raise DomainError(message='expected a non-negative matrix')
    return array


def strongly_connected_blocks(matrix):
    """Index lists of the strongly connected components of the graph i -> j, M[i, j] > 0."""
    array = _as_array(matrix)
    if array.shape[0] == 0:
        return []
    count, labels = connected_components(csr_matrix(array > 0), directed=True,
                                         connection='strong')
    blocks = [[] for _ in range(count)]
    for i, label in enumerate(labels):
        blocks[label].append(i)
    return sorted(blocks)


def _perron_root(block):
    """Spectral radius of an irreducible non-negative matrix.

    Power iteration runs on B + I, which is primitive, from the all-ones vector;
    it stops when the Rayleigh quotient changes by less than RAYLEIGH_TOL
    relatively, and the result is clamped to the Collatz-Wielandt bounds.
    """
    shifted = block + np.eye(block.shape[0])
    x = np.ones(block.shape[0])
    rho = None
    for _ in range(MAX_POWER_ITERATIONS):
        y = shifted.dot(x)
        estimate = x.dot(y) / x.dot(x)
        x = y / np.linalg.norm(y)
        if rho is not None and abs(estimate - rho) <= RAYLEIGH_TOL * abs(estimate):
            rho = estimate
            break
        rho = estimate
    y = shifted.dot(x)
    ratios = y / x
    rho = min(max(rho, ratios.min()), ratios.max())
    return rho - 1.0


def leading_eigenvalue(matrix):
    """Spectral radius of a non-negative square matrix.

    Reducible matrices are split into strongly connected components; the result
    is the largest Perron root of the diagonal blocks.
    """
    array = _as_array(matrix)
    if array.shape[0] == 0:
        raise DomainError(message='empty matrix')
    best = 0.0
    for block in strongly_connected_blocks(array):
        if len(block) == 1:
            value = array[block[0], block[0]]
        else:
            value = _perron_root(array[np.ix_(block, block)])
        best = max(best, value)
    return float(best)


def matrix_obstructs(matrix, tol=OBSTRUCTION_TOL):
    """lambda >= 1, with the boundary included."""
    return leading_eigenvalue(matrix) >= 1.0 - tol


def obstruction_check(partition, tol=OBSTRUCTION_TOL):
    return matrix_obstructs(transition_matrix(partition), tol=tol)


class ObstructionRow(object):

    def __init__(self, partition):
        self.partition = partition
        self.matrix = transition_matrix(partition)
        self.eigenvalue = leading_eigenvalue(self.matrix)
        self.expected = 2.0 ** (-1.0 / partition.p)
        self.obstructed = self.eigenvalue >= 1.0 - OBSTRUCTION_TOL

    def as_dict(self):
        return {'partition': str(self.partition), 'p': self.partition.p,
                'matrix': self.matrix.serialize(), 'eigenvalue': self.eigenvalue,
                'expected': self.expected, 'obstruction': self.obstructed}


def obstruction_table(n):
    return [ObstructionRow(part) for part in enumerate_partitions(n)]
