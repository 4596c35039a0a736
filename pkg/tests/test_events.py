import unittest

import dotdot
from cubicatlas.events import (Event, ProgressEvent, CurveBuiltEvent, LoopTrackedEvent,
                               RegionClassifiedEvent, PreCommandEvent)


class StepEvent(ProgressEvent):
    _format = "Period {n}: step {step}."


class TestEvents(unittest.TestCase):

    def setUp(self):
        self.received = []
        self.registered = []

    def tearDown(self):
        for cls, f in self.registered:
            cls.forget(f)

    def listen(self, cls, *extra):
        def collect(event, *args):
            self.received.append((type(event).__name__,) + args)
        cls.listen(*extra)(collect)
        self.registered.append((cls, collect))
        return collect

    def test_extra_arguments(self):
        self.listen(CurveBuiltEvent, 'disk')
        CurveBuiltEvent(2, degree=2, terms=4, source='cache').send()
        self.assertEqual(self.received, [('CurveBuiltEvent', 'disk')])

    def test_subclasses_reach_base_listeners(self):
        self.listen(ProgressEvent)
        self.listen(LoopTrackedEvent)
        LoopTrackedEvent(3, index=1, total=4, beta=0.5, cycles='(0 1)').send()
        CurveBuiltEvent(3, degree=8, terms=30, source='built').send()
        self.assertEqual(self.received, [('LoopTrackedEvent',), ('LoopTrackedEvent',),
                                         ('CurveBuiltEvent',)])

    def test_unrelated_listeners_silent(self):
        self.listen(PreCommandEvent)
        RegionClassifiedEvent(2, region=0, word='10', samples=8).send()
        self.assertEqual(self.received, [])

    def test_forget(self):
        collect = self.listen(Event)
        Event.forget(collect)
        PreCommandEvent().send()
        self.assertEqual(self.received, [])

    def test_listen_returns_function(self):
        def f(event):
            return 'called'
        self.assertIs(StepEvent.listen()(f), f)
        StepEvent.forget(f)

    def test_progress_description(self):
        self.assertEqual(StepEvent(3, step=2).description, 'Period 3: step 2.')

    def test_region_description(self):
        event = RegionClassifiedEvent(2, region=1, word='00', samples=8)
        self.assertEqual(event.description,
                         'Period 2: region 1 has kneading word 00 (8 samples).')

    def test_loop_description(self):
        event = LoopTrackedEvent(3, index=2, total=4, beta=0.25, cycles='(0 2)')
        self.assertEqual(event.description,
                         'Period 3: loop 2/4 around a = 0.25 gives (0 2).')


if __name__ == '__main__':
    unittest.main()
