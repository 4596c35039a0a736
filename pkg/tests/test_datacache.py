import unittest

import dotdot
import fake_env

from cubicatlas import content, datacache, events, exactpoly, monodromy
from cubicatlas.errors import DegreeBudgetError


PHI2 = exactpoly.build_Phin(2)


class TestDataCache(fake_env.TestFakeFs):

    def setUp(self):
        super(TestDataCache, self).setUp()
        exactpoly.phin_cache.clear()
        self.sources = []

    def tearDown(self):
        exactpoly.phin_cache.clear()
        events.CurveBuiltEvent.forget(self.record)

    def record(self, event):
        self.sources.append(event.fields['source'])

    def _record(self):
        events.CurveBuiltEvent.listen()(self.record)
        return self.sources

    def test_lazy(self):
        dc = datacache.DataCache('cache')
        self.assertFalse(content.check_directory('cache', fail=False))
        with self.assertRaises(IOError):
            dc.exists('phin', 2)

    def test_phin_built_then_cached(self):
        sources = self._record()
        dc = datacache.DataCache('cache', create=True)
        self.assertEqual(dc.phin(2), PHI2)
        self.assertTrue(dc.exists('phin', 2))
        exactpoly.phin_cache.clear()
        self.assertEqual(datacache.DataCache('cache').phin(2), PHI2)
        self.assertEqual(sources[-2:], ['built', 'cache'])

    def test_damaged_phin_is_rebuilt(self):
        dc = datacache.DataCache('cache', create=True)
        content.write_file(dc.path('phin', 2), 'PHIN n=2 degv=7\n')
        self.assertEqual(dc.phin(2), PHI2)
        self.assertEqual(dc.databroker.pull_phin(2), PHI2)

    def test_budget(self):
        dc = datacache.DataCache('cache', create=True)
        with self.assertRaises(DegreeBudgetError):
            dc.phin(6, max_period=5)

    def test_monodromy_reuse(self):
        dc = datacache.DataCache('cache', create=True)
        curve = monodromy.NumericCurve(dc.phin(2), n=2)
        result = monodromy.connected_components(2, seed=3, curve=curve)
        dc.push_monodromy(result)
        tolerances = result.tolerances
        pulled = dc.pull_monodromy(2, 3, tolerances)
        self.assertEqual(pulled.generators, result.generators)
        self.assertIsNone(dc.pull_monodromy(2, 4, tolerances))
        changed = dict(tolerances, residual_tol=1.0)
        self.assertIsNone(dc.pull_monodromy(2, 3, changed))
        self.assertIsNone(dc.pull_monodromy(3, 3, tolerances))

    def test_phin_in_memory_is_written(self):
        exactpoly.seed_phin(2, PHI2)
        dc = datacache.DataCache('other', create=True)
        self.assertEqual(dc.phin(2), PHI2)
        self.assertTrue(dc.exists('phin', 2))

    def test_report_and_plot(self):
        dc = datacache.DataCache('cache', create=True)
        path = dc.push_report(2, {'n': 2})
        self.assertEqual(path, dc.path('report', 2))
        self.assertEqual(dc.databroker.pull_result('report', 2), {'n': 2})
        dc.push_plot(2, ['x'], [[1]])
        self.assertEqual(dc.listing('plot'), [2])


if __name__ == '__main__':
    unittest.main()
