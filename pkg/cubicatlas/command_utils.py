"""Contains code that is reused over commands, like argument definition
or help messages.
"""
import argparse


def period(text):
    """argparse type for a period n >= 1."""
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('invalid period: {!r}'.format(text))
    if n < 1:
        raise argparse.ArgumentTypeError('the period must be positive, got {}'.format(n))
    return n


def complex_number(text):
    """argparse type accepting Python syntax (1.5, -2j, 0.3+1.2j) and `re,im`."""
    text = text.strip().replace(' ', '')
    try:
        if ',' in text:
            re_part, im_part = text.split(',')
            return complex(float(re_part), float(im_part))
        return complex(text.replace('i', 'j'))
    except ValueError:
        raise argparse.ArgumentTypeError('invalid complex number: {!r}'.format(text))


def add_recompute_argument(parser, what):
    parser.add_argument(
        '-f', '--recompute', action='store_true', default=False,
        help="ignore the cached {} and compute it again.".format(what))


def add_workers_argument(parser):
    parser.add_argument(
        '-w', '--workers', type=int, default=None, metavar='N',
        help="threads used for independent computations (default: main.workers).")


def format_complex(z, digits=10):
    z = complex(z)
    return '{:.{d}g}{:+.{d}g}i'.format(z.real, z.imag, d=digits)
