"""
Terminal colors for words, periods and messages.

A palette maps a style name to its escape code. Style names are a color
name ('red', 'purple', ...) optionally prefixed by 'b' (bold), 'i' (italic)
or 'bi', plus the bare 'bold', 'italic' and 'bolditalic'. Colors use the
256 color codes `\\033[38;5;{c}m`.
"""
import os
import re
import sys


COLOR_CODES = {'black': 0, 'red': 1, 'green': 2, 'yellow': 3, 'blue': 4,
               'magenta': 5, 'cyan': 6, 'grey': 7, 'white': 15,
               'gray': 7, 'purple': 5}
COLOR_CODES.update({'bright' + name: code + 8 for name, code in list(COLOR_CODES.items())
                    if code < 8})

PREFIXES = {'': (), 'b': ('1',), 'i': ('3',), 'bi': ('1', '3')}


def _supports_colors(stream):
    if sys.platform == 'win32' and 'ANSICON' not in os.environ:
        return False
    if os.environ.get('TERM') == 'dumb':
        return False
    return hasattr(stream, 'isatty') and stream.isatty()


def _escape(flags):
    return '\033[{}m'.format(';'.join(flags)) if flags else ''


def generate_colors(stream, color=True, bold=True, italic=True, force_colors=False):
    """Palette for `stream`; every code is empty when the stream is no terminal.

    With `color` False the prefixed styles still switch bold and italic on
    without changing the current color.
    """
    allowed = {'1': bold, '3': italic}
    active = (color or bold or italic) and (force_colors or _supports_colors(stream))
    palette = {'': '', 'end': '\033[0m' if active else ''}

    for style, flags in (('bold', ('1',)), ('italic', ('3',)), ('bolditalic', ('1', '3'))):
        kept = [f for f in flags if allowed[f]]
        palette[style] = _escape(kept) if active else ''

    for name, code in COLOR_CODES.items():
        for prefix, flags in PREFIXES.items():
            kept = [f for f in flags if allowed[f]]
            if color:
                kept.append('38;5;{}'.format(code))
            palette[prefix + name] = _escape(kept) if active else ''
    return palette


COLORS_OUT = generate_colors(sys.stdout, color=False, bold=False, italic=False)
COLORS_ERR = generate_colors(sys.stderr, color=False, bold=False, italic=False)


def dye_out(s, style='end'):
    return '{}{}{}'.format(COLORS_OUT[style], s, COLORS_OUT['end'])


def dye_err(s, style='end'):
    return '{}{}{}'.format(COLORS_ERR[style], s, COLORS_ERR['end'])


def setup(conf, force_colors=False):
    """Palettes of stdout and stderr from the [formating] and [theme] sections."""
    global COLORS_OUT, COLORS_ERR
    formating = conf['formating']
    options = dict(color=formating['color'], bold=formating['bold'],
                   italic=formating['italics'], force_colors=force_colors)
    COLORS_OUT = generate_colors(sys.stdout, **options)
    COLORS_ERR = generate_colors(sys.stderr, **options)
    for key, style in conf['theme'].items():
        COLORS_OUT[key] = COLORS_OUT.get(style, '')
        COLORS_ERR[key] = COLORS_ERR.get(style, '')


_escape_re = re.compile('\x1b\\[[;\\d]*[A-Za-z]')


def undye(s):
    """`s` without its escape codes."""
    return _escape_re.sub('', s)
