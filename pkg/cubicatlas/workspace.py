from . import atlas
from . import exactpoly
from . import monodromy
from .datacache import DataCache


class Workspace(object):
    """Settings of one run and the cache directory they read and write.

    Results on disk are reused only when they were computed with the same
    seed and the same tolerances.
    """

    def __init__(self, conf, create=True):
        self.conf = conf
        self.databroker = DataCache(self.conf['main']['cache_dir'], create=create)

    def close(self):
        self.databroker.close()

    @property
    def seed(self):
        return self.conf['main']['seed']

    @property
    def workers(self):
        return self.conf['main']['workers']

    # settings

    def tracking_options(self):
        section = self.conf['monodromy']
        return monodromy.tracking_options(residual_tol=section['residual_tol'],
                                          min_step=section['min_step'],
                                          newton_iterations=section['newton_iterations'])

    def monodromy_options(self):
        section = self.conf['monodromy']
        return monodromy.monodromy_tolerances(circle_points=section['circle_points'],
                                              clearance=section['clearance'],
                                              merge_tol=section['merge_tol'],
                                              **self.tracking_options())

    def kneading_settings(self):
        return atlas.KneadingSettings(tol=self.conf['dynamics']['tol'],
                                      budget=self.conf['dynamics']['budget'],
                                      resolution=self.conf['kneading']['resolution'],
                                      max_resolution=self.conf['kneading']['max_resolution'],
                                      margin_fraction=self.conf['kneading']['margin_fraction'])

    # curves

    def phin(self, n):
        return self.databroker.phin(n, max_period=self.conf['curve']['max_period'])

    def curve(self, n):
        """Numeric Phi_n, within the monodromy degree budget."""
        exactpoly.check_budget(n, self.conf['monodromy']['max_period'])
        return monodromy.NumericCurve(self.phin(n), n=n)

    # monodromy

    def cached_components(self, n):
        return self.databroker.pull_monodromy(n, self.seed, self.monodromy_options())

    def components(self, n, recompute=False, workers=None):
        """:returns: (MonodromyResult, True if it was read from the cache)"""
        if not recompute:
            result = self.cached_components(n)
            if result is not None:
                return result, True
        result = monodromy.connected_components(
            n, seed=self.seed, curve=self.curve(n),
            workers=workers or self.workers, **self.monodromy_options())
        self.databroker.push_monodromy(result)
        return result, False

    # atlas

    def atlas_options(self):
        section = self.conf['atlas']
        return {'radius_factor': section['radius_factor'],
                'samples': section['samples'],
                'doublings': section['doublings']}

    def atlas(self, n, radius=None, components=None, recompute=False, workers=None):
        """:returns: (AtlasReport, True if it was read from the cache)"""
        options = self.atlas_options()
        if not recompute and radius is None:
            report = self.databroker.pull_atlas(n)
            if report is not None and self._matches(report, options):
                return report, True
        if components is None:
            components = self.cached_components(n)
        report = atlas.build_atlas(
            n, seed=self.seed, radius=radius, curve=self.curve(n), components=components,
            settings=self.kneading_settings(), workers=workers or self.workers,
            circle_points=self.conf['monodromy']['circle_points'],
            **dict(options, **self.tracking_options()))
        self.databroker.push_atlas(report, include_timings=self.conf['report']['timings'])
        return report, False

    def _matches(self, report, options):
        expected = dict(self.kneading_settings().as_dict(), samples=options['samples'],
                        radius_factor=options['radius_factor'],
                        circle_points=self.conf['monodromy']['circle_points'],
                        **self.tracking_options())
        return report.seed == self.seed and report.tolerances == expected

    def path(self, kind, n):
        return self.databroker.path(kind, n)
