import contextlib
import io
import locale
import os
import sys

import dotdot

from pyfakefs import fake_filesystem_unittest


# pyfakefs calls locale.getpreferredencoding(False)
locale.setlocale(locale.LC_ALL, '')


def slow_tests_enabled():
    """Long monodromy computations run only when CUBICATLAS_SLOW_TESTS is set."""
    return bool(os.environ.get('CUBICATLAS_SLOW_TESTS'))


class _Echo(io.StringIO):
    """Keeps what is written, and repeats it on `echo` when one is given."""

    def __init__(self, echo=None):
        super(_Echo, self).__init__()
        self.echo = echo

    def write(self, s):
        if self.echo is not None:
            self.echo.write(s)
        return super(_Echo, self).write(s)


def capture(f, verbose=False):
    """Wrap `f` to return `(result, stdout text, stderr text)`.

    With `verbose`, stdout is still shown on the real stderr.
    """
    def captured(*args, **kwargs):
        out = _Echo(echo=sys.stderr if verbose else None)
        err = _Echo()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            result = f(*args, **kwargs)
        return result, out.getvalue(), err.getvalue()
    return captured


class TestFakeFs(fake_filesystem_unittest.TestCase):
    """Runs in an empty fake filesystem holding only the home and test directories."""

    def setUp(self):
        self.rootpath = os.path.abspath(os.path.dirname(__file__))
        self.homepath = os.path.expanduser('~')
        self.setUpPyfakefs()
        for name in self.fs.listdir('/'):
            if name not in ('var', 'tmp'):
                self.fs.remove_object(os.path.join('/', name))
        self.fs.create_dir(self.homepath)
        self.fs.create_dir(self.rootpath)
        os.chdir(self.rootpath)
