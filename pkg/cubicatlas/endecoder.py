import csv
import enum
import io
import json
import re
from fractions import Fraction

import numpy as np

from .exactpoly import BivariatePolynomial

"""Important notice:
    All functions and methods in this file assume and produce unicode data.
"""


PHIN_HEADER = re.compile(r'^PHIN n=(\d+) degv=(\d+)$')


def _json_default(o):
    if isinstance(o, complex):
        return [float(o.real), float(o.imag)]
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, enum.Enum):
        return o.value
    raise TypeError('{!r} is not JSON serializable'.format(o))


class EnDecoder(object):
    """ Encode and decode content.

        Design choices:
        * Has no interaction with disk.
        * Incoming content is not trusted.
        * Returned content must be correctly formatted (no one else checks).
        * Encoding is deterministic: identical inputs give identical text.
    """

    class PhinDecodingError(Exception):

        def __init__(self, error_msg, data):
            """
            :param error_msg: specific message about what went wrong
            :param data:      the data that was unsuccessfully decoded.
            """
            super(Exception, self).__init__(error_msg)  # make `str(self)` work.
            self.data = data

    class JsonDecodingError(PhinDecodingError):
        pass

    def encode_phin(self, n, poly):
        """Header `PHIN n=<n> degv=<d>`, then `i j c` per term sorted by (i, j)."""
        lines = ['PHIN n={} degv={}'.format(n, poly.degree_v)]
        lines.extend('{} {} {}'.format(i, j, c) for (i, j), c in poly.sorted_terms())
        return '\n'.join(lines) + '\n'

    def decode_phin(self, data):
        """:returns: (n, BivariatePolynomial)"""
        lines = data.splitlines()
        if not lines:
            raise self.PhinDecodingError('empty polynomial file', data)
        match = PHIN_HEADER.match(lines[0].strip())
        if match is None:
            raise self.PhinDecodingError('bad header: {!r}'.format(lines[0]), data)
        n, degree = int(match.group(1)), int(match.group(2))
        terms = {}
        previous = None
        for number, line in enumerate(lines[1:], 2):
            fields = line.split()
            if not fields:
                continue
            try:
                i, j, c = (int(x) for x in fields)
            except ValueError:
                raise self.PhinDecodingError(
                    'line {}: expected `i j coefficient`, got {!r}'.format(number, line), data)
            if i < 0 or j < 0 or c == 0:
                raise self.PhinDecodingError('line {}: invalid term {!r}'.format(number, line),
                                             data)
            if previous is not None and (i, j) <= previous:
                raise self.PhinDecodingError('line {}: terms not sorted by (i, j)'.format(number),
                                             data)
            previous = (i, j)
            terms[(i, j)] = c
        poly = BivariatePolynomial(terms)
        if poly.degree_v != degree:
            raise self.PhinDecodingError('header announces degree {} in v, terms have {}'
                                         .format(degree, poly.degree_v), data)
        return n, poly

    def encode_json(self, data):
        return json.dumps(data, sort_keys=True, indent=2, default=_json_default,
                          ensure_ascii=False) + '\n'

    def decode_json(self, data):
        try:
            return json.loads(data)
        except ValueError as e:
            raise self.JsonDecodingError('invalid JSON: {}'.format(e), data)

    def encode_csv(self, header, rows):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()

    def decode_csv(self, data):
        """:returns: (header, rows) with string cells"""
        rows = list(csv.reader(io.StringIO(data)))
        if not rows:
            return [], []
        return rows[0], rows[1:]
