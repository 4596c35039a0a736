from . import content
from . import databroker
from . import exactpoly
from . import monodromy
from .atlas import AtlasReport
from .errors import ConsistencyError
from .events import CurveBuiltEvent


class DataCache(object):
    """ DataCache class, provides a very similar interface as DataBroker

        Has two roles :
        1. Provides a buffer between the commands and the hard drive.
           Until a command request a hard drive ressource, it does not touch it.
        2. Keeps the exact polynomials Phi_n in the process-wide write-once
           cache, loading them from disk when possible and building them
           (then storing them) otherwise.
    """

    def __init__(self, directory, create=False):
        self.directory = directory
        self._databroker = None
        if create:
            self._create()

    def close(self):
        if self._databroker is not None:
            self._databroker.close()

    @property
    def databroker(self):
        if self._databroker is None:
            self._databroker = databroker.DataBroker(self.directory, create=False)
        return self._databroker

    def _create(self):
        self._databroker = databroker.DataBroker(self.directory, create=True)

    # curves

    def phin(self, n, max_period=None):
        exactpoly.check_budget(n, max_period)
        poly = exactpoly.phin_cache.get(n)
        if poly is not None:
            if not self.databroker.exists('phin', n):
                self.databroker.push_phin(n, poly)
            return poly
        poly = self._try_pull_phin(n)
        if poly is not None:
            poly = exactpoly.seed_phin(n, poly)
            source = 'cache'
        else:
            poly = exactpoly.build_Phin(n, max_period=max_period)
            self.databroker.push_phin(n, poly)
            source = 'built'
        CurveBuiltEvent(n, degree=poly.degree_v, terms=len(poly), source=source).send()
        return poly

    def _try_pull_phin(self, n):
        if not self.databroker.exists('phin', n):
            return None
        try:
            return self.databroker.pull_phin(n)
        except (self.databroker.endecoder.PhinDecodingError, ConsistencyError,
                content.UnreadableFile):
            # take no prisonners; a damaged file is rebuilt.
            return None

    # monodromy

    def pull_monodromy(self, n, seed, tolerances):
        """The stored result when it was computed with the same seed and tolerances."""
        data = self._try_pull_result('monodromy', n)
        if data is None:
            return None
        if data.get('seed') != seed or data.get('tolerances') != dict(tolerances):
            return None
        try:
            return monodromy.MonodromyResult.from_dict(data)
        except (KeyError, TypeError, ValueError):
            return None

    def push_monodromy(self, result):
        return self.databroker.push_result('monodromy', result.n, result.as_dict())

    # atlas

    def pull_atlas(self, n):
        data = self._try_pull_result('atlas', n)
        if data is None:
            return None
        try:
            return AtlasReport.from_dict(data)
        except (KeyError, TypeError, ValueError):
            return None

    def push_atlas(self, report, include_timings=False):
        return self.databroker.push_result('atlas', report.n,
                                           report.as_dict(include_timings=include_timings))

    # reports

    def push_report(self, n, data):
        return self.databroker.push_result('report', n, data)

    def push_plot(self, n, header, rows):
        return self.databroker.push_table('plot', n, header, rows)

    def _try_pull_result(self, kind, n):
        if not self.databroker.exists(kind, n):
            return None
        try:
            return self.databroker.pull_result(kind, n)
        except (ValueError, KeyError, content.UnreadableFile):
            return None

    def exists(self, kind, n):
        return self.databroker.exists(kind, n)

    def listing(self, kind):
        return self.databroker.listing(kind)

    def path(self, kind, n):
        return self.databroker.path(kind, n)
