"""Exact integer polynomials in the parameters (a, v) of the critically
marked cubic family

    P_{a,v}(z) = z^3 - 3 a^2 z + 2 a^3 + v.

Conventions:
    - a BivariatePolynomial maps exponent pairs (i, j), i the degree in a
      and j the degree in v, to nonzero python integers,
    - a UnivariatePolynomial is a polynomial in a alone, stored as a dense
      tuple of integers, lowest degree first,
    - nothing in this module rounds; floating point images are produced
      explicitly by NumericPolynomial.

Large products are computed by Kronecker substitution: the coefficients are
packed into the bytes of a single python integer, multiplied once, and
unpacked.
"""
import math
import threading
from functools import reduce

import numpy as np

from .errors import (ConsistencyError, DegreeBudgetError, DivisibilityError,
                     DomainError)


DEFAULT_MAX_PERIOD = 8
MODULAR_PRIMES = (2 ** 61 - 1, 2 ** 31 - 1)
VARIABLES = ('a', 'v')

# below this many term pairs, schoolbook multiplication wins.
_NAIVE_PRODUCT_LIMIT = 64


# Kronecker substitution

def _slot_width(bound):
    """Bytes per slot so that signed values of magnitude <= bound fit."""
    return bound.bit_length() // 8 + 1


def _pack(coefficients, width):
    positive = b''.join(c.to_bytes(width, 'little') if c > 0 else bytes(width)
                        for c in coefficients)
    negative = b''.join((-c).to_bytes(width, 'little') if c < 0 else bytes(width)
                        for c in coefficients)
    return int.from_bytes(positive, 'little') - int.from_bytes(negative, 'little')


def _unpack(value, width, count):
    # every slot is biased by 2^(8 width - 1) so that digits are nonnegative
    bias = int.from_bytes((bytes(width - 1) + b'\x80') * count, 'little')
    raw = (value + bias).to_bytes(width * count, 'little')
    half = 1 << (8 * width - 1)
    return [int.from_bytes(raw[k * width:(k + 1) * width], 'little') - half
            for k in range(count)]


def dense_multiply(p, q):
    """Product of two dense integer coefficient lists, lowest degree first."""
    if len(p) == 0 or len(q) == 0:
        return []
    count = len(p) + len(q) - 1
    if len(p) * len(q) <= _NAIVE_PRODUCT_LIMIT:
        result = [0] * count
        for i, x in enumerate(p):
            if x:
                for j, y in enumerate(q):
                    result[i + j] += x * y
        return result
    bound = (max(abs(c) for c in p) * max(abs(c) for c in q)
             * min(len(p), len(q)))
    if bound == 0:
        return [0] * count
    width = _slot_width(bound)
    return _unpack(_pack(p, width) * _pack(q, width), width, count)


# Univariate

class UnivariatePolynomial(object):
    """Dense polynomial in a with integer coefficients, lowest degree first."""

    __slots__ = ('coefficients',)

    def __init__(self, coefficients=()):
        coefficients = [int(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients = tuple(coefficients)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return len(self.coefficients) == 0

    @property
    def leading(self):
        return self.coefficients[-1] if self.coefficients else 0

    def __call__(self, x):
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = UnivariatePolynomial.constant(other)
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.coefficients)

    def __neg__(self):
        return UnivariatePolynomial([-c for c in self.coefficients])

    def __add__(self, other):
        if isinstance(other, int):
            other = UnivariatePolynomial.constant(other)
        long, short = self.coefficients, other.coefficients
        if len(long) < len(short):
            long, short = short, long
        result = list(long)
        for k, c in enumerate(short):
            result[k] += c
        return UnivariatePolynomial(result)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = UnivariatePolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return UnivariatePolynomial([other * c for c in self.coefficients])
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return UnivariatePolynomial(dense_multiply(list(self.coefficients),
                                                   list(other.coefficients)))

    __rmul__ = __mul__

    def __repr__(self):
        return 'UnivariatePolynomial({})'.format(list(self.coefficients))

    def derivative(self):
        return UnivariatePolynomial([k * c for k, c in enumerate(self.coefficients)][1:])

    def content(self):
        """Nonnegative gcd of the coefficients."""
        return reduce(math.gcd, self.coefficients, 0)

    def primitive_part(self):
        """Divide out the content; the leading coefficient is made positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return UnivariatePolynomial([c // g for c in self.coefficients])

    def pseudo_remainder(self, other):
        if other.is_zero:
            raise ZeroDivisionError('pseudo division by the zero polynomial')
        remainder = list(self.coefficients)
        divisor = other.coefficients
        lead, dg = divisor[-1], len(divisor) - 1
        while len(remainder) - 1 >= dg and remainder:
            top = remainder[-1]
            shift = len(remainder) - 1 - dg
            remainder = [lead * c for c in remainder]
            for k, c in enumerate(divisor):
                remainder[shift + k] -= top * c
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return UnivariatePolynomial(remainder)

    def exact_div(self, other):
        """Quotient in Z[a]; raises DivisibilityError if other does not divide."""
        if other.is_zero:
            raise ZeroDivisionError('division by the zero polynomial')
        remainder = list(self.coefficients)
        divisor = other.coefficients
        lead, dg = divisor[-1], len(divisor) - 1
        quotient = [0] * max(len(remainder) - dg, 0)
        while len(remainder) - 1 >= dg and remainder:
            top = remainder[-1]
            if top % lead != 0:
                raise DivisibilityError(message='univariate division is not exact')
            c = top // lead
            shift = len(remainder) - 1 - dg
            quotient[shift] = c
            for k, d in enumerate(divisor):
                remainder[shift + k] -= c * d
            while remainder and remainder[-1] == 0:
                remainder.pop()
        if remainder:
            raise DivisibilityError(message='univariate division is not exact')
        return UnivariatePolynomial(quotient)

    def gcd(self, other):
        """Greatest common divisor by the primitive remainder sequence."""
        if self.is_zero:
            return other.primitive_part() * other.content()
        if other.is_zero:
            return self.primitive_part() * self.content()
        f, g = self.primitive_part(), other.primitive_part()
        if f.degree < g.degree:
            f, g = g, f
        while not g.is_zero:
            r = f.pseudo_remainder(g)
            f, g = g, r.primitive_part()
        return f.primitive_part() * math.gcd(self.content(), other.content())

    def squarefree_part(self):
        """Primitive squarefree part, p / gcd(p, p')."""
        if self.degree < 1:
            return UnivariatePolynomial.constant(1) if not self.is_zero else self
        p = self.primitive_part()
        return p.exact_div(p.gcd(p.derivative()).primitive_part()).primitive_part()

    def repeated_root_count(self, primes=MODULAR_PRIMES):
        """Degree of gcd(p, p') modulo each prime not dividing the leading
        coefficient, the smallest one kept.

        It bounds the number of repeated roots (with multiplicity) from above,
        and 0 proves p squarefree.  None when every prime divides the leading
        coefficient.
        """
        if self.degree < 1:
            return 0
        counts = [_modular_gcd_degree(self.coefficients, self.derivative().coefficients, q)
                  for q in primes if self.leading % q]
        return min(counts) if counts else None


def _trimmed_mod(coefficients, prime):
    reduced = [c % prime for c in coefficients]
    while reduced and reduced[-1] == 0:
        reduced.pop()
    return reduced


def _modular_gcd_degree(p, q, prime):
    """Degree of gcd(p, q) over Z/prime; -1 when both vanish."""
    f, g = _trimmed_mod(p, prime), _trimmed_mod(q, prime)
    while g:
        inverse = pow(g[-1], prime - 2, prime)
        while len(f) >= len(g):
            factor = f[-1] * inverse % prime
            shift = len(f) - len(g)
            for k, c in enumerate(g):
                f[shift + k] = (f[shift + k] - factor * c) % prime
            while f and f[-1] == 0:
                f.pop()
        f, g = g, f
    return len(f) - 1


# Bivariate

class BivariatePolynomial(object):
    """Sparse polynomial in (a, v) with integer coefficients."""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for (i, j), c in dict(terms).items():
                if i < 0 or j < 0:
                    raise DomainError(message='negative exponent ({}, {})'.format(i, j))
                c = int(c)
                if c:
                    self.terms[(int(i), int(j))] = c

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def variable(cls, name):
        if name == 'a':
            return cls({(1, 0): 1})
        elif name == 'v':
            return cls({(0, 1): 1})
        raise DomainError(message='unknown variable {!r}; use one of {}'.format(name, VARIABLES))

    # degrees

    @property
    def is_zero(self):
        return len(self.terms) == 0

    @property
    def degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    @property
    def degree_a(self):
        return max((i for i, _ in self.terms), default=-1)

    @property
    def degree_v(self):
        return max((j for _, j in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, i, j):
        return self.terms.get((i, j), 0)

    def max_coefficient(self):
        return max((abs(c) for c in self.terms.values()), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items())

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return BivariatePolynomial(terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BivariatePolynomial({k: other * c for k, c in self.terms.items()})
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return BivariatePolynomial()
        if len(self) * len(other) <= _NAIVE_PRODUCT_LIMIT:
            terms = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    key = (i1 + i2, j1 + j2)
                    terms[key] = terms.get(key, 0) + c1 * c2
            return BivariatePolynomial(terms)
        # a-degree slots wide enough that the product never carries over
        stride = self.degree_a + other.degree_a + 1
        product = dense_multiply(self._packed(stride), other._packed(stride))
        return BivariatePolynomial({(k % stride, k // stride): c
                                    for k, c in enumerate(product) if c})

    __rmul__ = __mul__

    def _packed(self, stride):
        dense = [0] * ((self.degree_v + 1) * stride)
        for (i, j), c in self.terms.items():
            dense[j * stride + i] = c
        return dense

    def __pow__(self, exponent):
        if exponent < 0:
            raise DomainError(message='negative power of a polynomial')
        result = BivariatePolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __repr__(self):
        if self.is_zero:
            return '0'
        monomials = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-t[0][1], -t[0][0])):
            factors = [name if e == 1 else '{}^{}'.format(name, e)
                       for name, e in (('a', i), ('v', j)) if e]
            if not factors:
                monomials.append(str(c))
            elif c == 1:
                monomials.append('*'.join(factors))
            elif c == -1:
                monomials.append('-' + '*'.join(factors))
            else:
                monomials.append('{}*{}'.format(c, '*'.join(factors)))
        return ' + '.join(monomials).replace('+ -', '- ')

    # structure

    def coefficients_in_v(self):
        """List of UnivariatePolynomial in a; entry j multiplies v^j."""
        rows = [[0] * (self.degree_a + 1) for _ in range(self.degree_v + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        return [UnivariatePolynomial(row) for row in rows]

    @classmethod
    def from_coefficients_in_v(cls, coefficients):
        terms = {}
        for j, poly in enumerate(coefficients):
            for i, c in enumerate(poly.coefficients):
                if c:
                    terms[(i, j)] = c
        return cls(terms)

    def evaluate(self, a, v):
        """Horner evaluation in v, coefficients evaluated in a.

        Accepts python or numpy scalars (complex included); floating point
        round-off is not tracked.
        """
        if self.is_zero:
            return 0
        result = 0
        for poly in reversed(self.coefficients_in_v()):
            result = result * v + poly(a)
        return result

    def partial(self, variable):
        if variable == 'a':
            return BivariatePolynomial({(i - 1, j): i * c
                                        for (i, j), c in self.terms.items() if i})
        elif variable == 'v':
            return BivariatePolynomial({(i, j - 1): j * c
                                        for (i, j), c in self.terms.items() if j})
        raise DomainError(message='unknown variable {!r}; use one of {}'.format(variable,
                                                                                VARIABLES))

    def involution(self):
        """The polynomial (a, v) -> p(-a, -v)."""
        return BivariatePolynomial({(i, j): -c if (i + j) % 2 else c
                                    for (i, j), c in self.terms.items()})

    def divmod_v(self, divisor):
        """Division in Z[a][v] by a divisor whose leading v-coefficient is +1 or -1."""
        divisor_rows = divisor.coefficients_in_v()
        if not divisor_rows:
            raise ZeroDivisionError('division by the zero polynomial')
        lead = divisor_rows[-1]
        if lead.degree != 0 or abs(lead.leading) != 1:
            raise DomainError(message='divisor must be monic in v (up to sign)')
        unit = lead.leading
        dv = len(divisor_rows) - 1
        remainder = self.coefficients_in_v()
        quotient = [UnivariatePolynomial()] * max(len(remainder) - dv, 0)
        for k in range(len(remainder) - 1, dv - 1, -1):
            top = remainder[k]
            if top.is_zero:
                continue
            c = top * unit
            quotient[k - dv] = c
            for m, d in enumerate(divisor_rows):
                if not d.is_zero:
                    remainder[k - dv + m] = remainder[k - dv + m] - c * d
        return (BivariatePolynomial.from_coefficients_in_v(quotient),
                BivariatePolynomial.from_coefficients_in_v(remainder[:dv]))

    def exact_div_v(self, divisor):
        quotient, remainder = self.divmod_v(divisor)
        if not remainder.is_zero:
            raise DivisibilityError(message='division in v left a remainder of {} terms'
                                            ''.format(len(remainder)))
        return quotient

    def coefficient_matrix(self):
        """Float array M with M[i, j] the coefficient of a^i v^j."""
        matrix = np.zeros((self.degree_a + 1, self.degree_v + 1), dtype=float)
        for (i, j), c in self.terms.items():
            matrix[i, j] = float(c)
        return matrix


# module level operations

def evaluate(p, a, v):
    return p.evaluate(a, v)


def partial_derivative(p, variable):
    return p.partial(variable)


def involution_symmetry_sign(p):
    """+1 if p(-a,-v) = p(a,v), -1 if p(-a,-v) = -p(a,v), None otherwise."""
    if p.is_zero:
        raise DomainError(message='the zero polynomial has no symmetry sign')
    image = p.involution()
    if image == p:
        return 1
    elif image == -p:
        return -1
    return None


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n):
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def phin_degree_v(n):
    """Degree in v of Phi_n: sum over d | n of mobius(n/d) 3^(d-1)."""
    return sum(mobius(n // d) * 3 ** (d - 1) for d in divisors(n))


# Q_n and Phi_n

A = BivariatePolynomial.variable('a')
V = BivariatePolynomial.variable('v')
_A_SQUARED_3 = 3 * A * A
_CONSTANT_TERM = 2 * A * A * A + V

_orbit_lock = threading.Lock()
_orbit = [None, V]  # _orbit[k] = P^k(a) as a polynomial in (a, v)


def check_budget(n, max_period):
    if n < 1:
        raise DomainError(message='period must be positive, got {}'.format(n))
    if max_period is None:
        max_period = DEFAULT_MAX_PERIOD
    if n > max_period:
        raise DegreeBudgetError(n=n, max_period=max_period)


def critical_orbit(k):
    """P^k_{a,v}(a) as an exact polynomial, k >= 1."""
    with _orbit_lock:
        while len(_orbit) <= k:
            z = _orbit[-1]
            _orbit.append(z * z * z - _A_SQUARED_3 * z + _CONSTANT_TERM)
        return _orbit[k]


def build_Qn(n, max_period=None):
    """Q_n(a, v) = P^n_{a,v}(a) - a, vanishing when +a has period dividing n."""
    check_budget(n, max_period)
    return critical_orbit(n) - A


class PhinCache(object):
    """Write-once map n -> Phi_n.

    Concurrent builders may race; the first stored value wins and any later
    value must agree with it.
    """

    def __init__(self):
        self._entries = {}
        self._lock = threading.Lock()

    def __contains__(self, n):
        return n in self._entries

    def get(self, n):
        return self._entries.get(n)

    def put(self, n, poly):
        with self._lock:
            existing = self._entries.setdefault(n, poly)
        if existing is not poly and existing != poly:
            raise ConsistencyError(message='two different polynomials computed for '
                                           'Phi_{}'.format(n))
        return existing

    def clear(self):
        with self._lock:
            self._entries.clear()


phin_cache = PhinCache()


def build_Phin(n, max_period=None, verify=True):
    """Exact-period factor Phi_n = Q_n / prod_{d | n, d < n} Phi_d.

    The division is checked to be exact and, when verify is True, the
    identity prod_{d | n} Phi_d = Q_n is checked by exact multiplication.
    """
    check_budget(n, max_period)
    cached = phin_cache.get(n)
    if cached is not None:
        return cached
    qn = build_Qn(n, max_period=max_period)
    factors = [build_Phin(d, max_period=max_period, verify=verify)
               for d in divisors(n)[:-1]]
    phi = qn
    try:
        for factor in factors:
            phi = phi.exact_div_v(factor)
    except DivisibilityError:
        raise DivisibilityError(n=n)
    if phi.degree_v != phin_degree_v(n):
        raise ConsistencyError(message='Phi_{} has degree {} in v, expected {}'.format(
            n, phi.degree_v, phin_degree_v(n)))
    if verify:
        product = reduce(lambda p, q: p * q, factors, phi)
        if product != qn:
            raise DivisibilityError(n=n)
    return phin_cache.put(n, phi)


def seed_phin(n, poly):
    """Register a Phi_n loaded from elsewhere (e.g. the disk cache)."""
    if poly.degree_v != phin_degree_v(n):
        raise ConsistencyError(message='stored Phi_{} has degree {} in v, expected {}'.format(
            n, poly.degree_v, phin_degree_v(n)))
    return phin_cache.put(n, poly)


# Resultants

def _bareiss_determinant(matrix):
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return 1
    sign, previous = 1, 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, size):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous
        previous = pivot
    return sign * m[-1][-1]


def _sylvester_matrix(p, q):
    """Sylvester matrix of coefficient lists (lowest degree first, formal degrees)."""
    dp, dq = len(p) - 1, len(q) - 1
    size = dp + dq
    rows = []
    for k in range(dq):
        row = [0] * size
        row[k:k + dp + 1] = p[::-1]
        rows.append(row)
    for k in range(dp):
        row = [0] * size
        row[k:k + dq + 1] = q[::-1]
        rows.append(row)
    return rows


def _multiplication_matrix(p, q):
    """Rows v^k q mod p, k < deg p, for p with leading coefficient +1 or -1."""
    dp = len(p) - 1
    unit = p[-1]

    def reduce_top(r):
        while len(r) > dp:
            top = r.pop()
            if top:
                c = top * unit
                offset = len(r) - dp
                for m in range(dp):
                    r[offset + m] -= c * p[m]
        return r + [0] * (dp - len(r))

    row = reduce_top(list(q))
    rows = [row]
    for _ in range(dp - 1):
        row = reduce_top([0] + row)
        rows.append(row)
    return rows


def _resultant_at(p, q):
    """Resultant of two integer coefficient lists with formal degrees."""
    dp, dq = len(p) - 1, len(q) - 1
    if abs(p[-1]) == 1:
        return _bareiss_determinant(_multiplication_matrix(p, q)) * p[-1] ** dq
    if abs(q[-1]) == 1:
        sign = -1 if (dp * dq) % 2 else 1
        return sign * _bareiss_determinant(_multiplication_matrix(q, p)) * q[-1] ** dp
    return _bareiss_determinant(_sylvester_matrix(p, q))


def _interpolate_consecutive(values):
    """Integer polynomial taking values[k] at a = k, k = 0..N (Newton form)."""
    count = len(values)
    differences = list(values)
    leading = [differences[0]]
    for _ in range(1, count):
        differences = [y - x for x, y in zip(differences, differences[1:])]
        leading.append(differences[0])
    # sum_k leading[k] * binomial(a, k), scaled by (N)! to stay integral
    scale = math.factorial(count - 1)
    numerator = [0] * count
    falling = [1]  # a (a-1) ... (a-k+1)
    weight = scale
    for k, delta in enumerate(leading):
        if k > 0:
            falling = [0] + falling
            for m in range(len(falling) - 1):
                falling[m] -= (k - 1) * falling[m + 1]
            weight //= k
        if delta:
            for m, c in enumerate(falling):
                numerator[m] += delta * weight * c
    if any(c % scale for c in numerator):
        raise ConsistencyError(message='resultant interpolation is not integral')
    return UnivariatePolynomial([c // scale for c in numerator])


def resultant_bound(p, q):
    """Upper bound on the degree in a of Res_v(p, q)."""
    dp, dq = p.degree_v, q.degree_v
    return min(dq * p.degree_a + dp * q.degree_a, p.degree * q.degree)


def resultant_v(p, q):
    """Res_v(p, q) as an exact polynomial in a.

    Computed by evaluation at a = 0, 1, ..., N (N bounding its degree), an
    integer determinant at each node and exact interpolation.
    """
    if p.is_zero or q.is_zero:
        raise DomainError(message='resultant of the zero polynomial')
    dp, dq = p.degree_v, q.degree_v
    if dp < 1 and dq < 1:
        raise DomainError(message='resultant in v of two polynomials constant in v')
    p_rows, q_rows = p.coefficients_in_v(), q.coefficients_in_v()
    if dp == 0:
        return _power(p_rows[0], dq)
    if dq == 0:
        return _power(q_rows[0], dp)
    bound = max(resultant_bound(p, q), 0)
    values = [_resultant_at([row(x) for row in p_rows], [row(x) for row in q_rows])
              for x in range(bound + 1)]
    return _interpolate_consecutive(values)


def _power(poly, exponent):
    result = UnivariatePolynomial.constant(1)
    for _ in range(exponent):
        result = result * poly
    return result


def discriminant_v(p):
    """Res_v(p, dp/dv); for p monic in v, the discriminant up to sign."""
    return resultant_v(p, p.partial('v'))


# Numeric image

class NumericPolynomial(object):
    """Double precision image of a BivariatePolynomial.

    Evaluation is vectorised in v for a fixed a: the coefficients in v are
    formed first, then Horner's rule runs over numpy arrays.
    """

    def __init__(self, poly):
        self.exact = poly
        self.matrix = poly.coefficient_matrix()
        self.abs_matrix = np.abs(self.matrix)
        rows = np.arange(self.matrix.shape[0], dtype=float)[:, None]
        self.da_matrix = (self.matrix * rows)[1:]
        self.degree_v = poly.degree_v

    def fiber_coefficients(self, a):
        """Coefficients of v -> p(a, v), lowest degree first."""
        return np.polynomial.polynomial.polyval(a, self.matrix)

    def fiber_derivative(self, coefficients):
        return coefficients[1:] * np.arange(1, len(coefficients))

    def evaluate(self, a, v):
        return np.polynomial.polynomial.polyval(v, self.fiber_coefficients(a))

    def partials(self, a, v):
        coefficients = self.fiber_coefficients(a)
        pv = np.polynomial.polynomial.polyval(v, self.fiber_derivative(coefficients))
        if self.da_matrix.shape[0]:
            pa = np.polynomial.polynomial.polyval(
                v, np.polynomial.polynomial.polyval(a, self.da_matrix))
        else:
            pa = np.zeros_like(np.asarray(v, dtype=complex))
        return pa, pv

    def magnitude(self, a, v):
        """sum |c_ij| |a|^i |v|^j, the scale of a backward error."""
        scale = np.polynomial.polynomial.polyval(abs(a), self.abs_matrix)
        return np.polynomial.polynomial.polyval(np.abs(v), scale)

    def normalized_residual(self, a, v):
        return np.abs(self.evaluate(a, v)) / self.magnitude(a, v)

    def gradient_norm(self, a, v):
        """(|dp/da| + |dp/dv|) normalised by the coefficient magnitude."""
        pa, pv = self.partials(a, v)
        return (np.abs(pa) + np.abs(pv)) / self.magnitude(a, v)
