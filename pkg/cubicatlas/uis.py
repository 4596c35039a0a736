import sys
import traceback

from . import color
from . import config
from .errors import CubicAtlasError, BudgetError, NumericInstability, ConsistencyError


# set to True to let unhandled exceptions propagate with their trace.
DEBUG = False

# Shared by the commands through get_ui(); execute() sets it with init_ui(conf).
_ui = None


def get_ui():
    if _ui is None:
        return PrintUI(config.load_default_conf())
    return _ui


def init_ui(conf, force_colors=False):
    global _ui
    _ui = PrintUI(conf, force_colors=force_colors)


def exit_code(exc):
    """Process exit status for an exception reaching the command line."""
    if isinstance(exc, CubicAtlasError):
        return exc.exit_code
    return 1


def error_kind(exc):
    if isinstance(exc, BudgetError):
        return 'budget exceeded'
    if isinstance(exc, NumericInstability):
        return 'numerical error'
    if isinstance(exc, ConsistencyError):
        return 'consistency check failed'
    return 'error'


class PrintUI(object):
    """Writes results to stdout and diagnostics to stderr.

    Progress lines appear only with `main.verbose`.
    """

    def __init__(self, conf, force_colors=False):
        color.setup(conf, force_colors=force_colors)
        self._stdout = sys.stdout
        self._stderr = sys.stderr
        self.debug = conf['main'].get('debug', False)
        self.verbose = conf['main'].get('verbose', False)

    def _tagged(self, stream, tag, theme, message, **kwargs):
        dye = color.dye_out if stream is self._stdout else color.dye_err
        print('{}: {}'.format(dye(tag, theme), message), file=stream, **kwargs)

    def message(self, *messages, **kwargs):
        print(*messages, file=self._stdout, **kwargs)

    def info(self, message, **kwargs):
        self._tagged(self._stdout, 'info', 'ok', message, **kwargs)

    def progress(self, message, **kwargs):
        if self.verbose:
            self._tagged(self._stderr, 'progress', 'ok', message, **kwargs)

    def warning(self, message, **kwargs):
        self._tagged(self._stderr, 'warning', 'warning', message, **kwargs)

    def error(self, message, kind='error', **kwargs):
        self._tagged(self._stderr, kind, 'error', message, **kwargs)

    def handle_exception(self, exc):
        """Report `exc` and leave with its exit code; re-raise in debug mode."""
        self.error(str(exc), kind=error_kind(exc))
        if DEBUG or self.debug:
            traceback.print_exc(file=self._stderr)
            raise exc
        sys.exit(exit_code(exc))
