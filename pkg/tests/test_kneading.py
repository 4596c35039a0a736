import cmath
import unittest

import ddt

import dotdot
from cubicatlas import dynamics, kneading
from cubicatlas.dynamics import CubicMap
from cubicatlas.errors import DomainError
from cubicatlas.kneading import ComponentLabel, KneadingWord


def phi2_point(a, sign=1):
    """A root of v^2 + a v + 1 - 2a^2."""
    return (-a + sign * cmath.sqrt(9 * a * a - 4)) / 2


@ddt.ddt
class TestKneadingWord(unittest.TestCase):

    def test_from_string(self):
        word = KneadingWord.from_string('0110')
        self.assertEqual(word.symbols, (0, 1, 1, 0))
        self.assertEqual(str(word), '0110')
        self.assertEqual(word.n, 4)

    @ddt.data('', '012', '01a0')
    def test_not_binary(self, text):
        with self.assertRaises(DomainError):
            KneadingWord.from_string(text)

    def test_last_symbol_pinned(self):
        with self.assertRaises(DomainError):
            KneadingWord.from_string('01')

    def test_symbol_is_one_based(self):
        word = KneadingWord.from_string('1000')
        self.assertEqual(word.symbol(1), 1)
        self.assertEqual(word.symbol(4), 0)

    def test_zero_count_ignores_last(self):
        self.assertEqual(KneadingWord.from_string('0000').zero_count(), 3)

    def test_hashable(self):
        self.assertEqual(len({KneadingWord.from_string('10'), KneadingWord.from_string('10')}), 1)

    @ddt.data(2, 3, 4, 5)
    def test_admissible_words(self, n):
        words = kneading.admissible_words(n)
        self.assertEqual(len(words), 2 ** (n - 1))
        self.assertEqual(len(set(words)), 2 ** (n - 1))
        self.assertTrue(all(w.symbol(n) == 0 for w in words))


@ddt.ddt
class TestFlips(unittest.TestCase):

    def test_flip(self):
        self.assertEqual(kneading.twist_flip(KneadingWord.from_string('1000'), 1),
                         KneadingWord.from_string('0000'))
        self.assertEqual(kneading.twist_flip(KneadingWord.from_string('0000'), 3),
                         KneadingWord.from_string('0010'))

    @ddt.data(0, 4)
    def test_flip_out_of_range(self, m):
        with self.assertRaises(DomainError):
            kneading.twist_flip(KneadingWord.from_string('0000'), m)

    @ddt.data((2, '10'), (4, '1110'), (6, '111110'))
    @ddt.unpack
    def test_distinguished(self, n, text):
        word = kneading.distinguished_word(n)
        self.assertEqual(str(word), text)
        self.assertTrue(word.is_distinguished)

    def test_distinguished_too_short(self):
        with self.assertRaises(DomainError):
            kneading.distinguished_word(1)

    @ddt.data(('1000', [2, 3]), ('10', []), ('0000', [1, 2, 3]), ('0100', [1, 3]))
    @ddt.unpack
    def test_flip_path(self, text, path):
        self.assertEqual(kneading.flip_path_to_distinguished(KneadingWord.from_string(text)),
                         path)

    def test_flip_walk(self):
        walk = kneading.flip_walk(KneadingWord.from_string('1000'))
        self.assertEqual([str(w) for w in walk], ['1000', '1100', '1110'])

    @ddt.data(2, 3, 4, 5, 6)
    def test_every_walk_ends_distinguished(self, n):
        for word in kneading.admissible_words(n):
            walk = kneading.flip_walk(word)
            self.assertTrue(walk[-1].is_distinguished)
            self.assertEqual(len(walk) - 1, word.zero_count())
            self.assertEqual(len(kneading.flip_path_to_distinguished(word)),
                             word.hamming_to(kneading.distinguished_word(n)))

    def test_hamming_lengths_differ(self):
        with self.assertRaises(DomainError):
            KneadingWord.from_string('100').hamming_to(KneadingWord.from_string('10'))


class TestLocateComponent(unittest.TestCase):

    def setUp(self):
        a = 10.0
        self.cubic = CubicMap(a, phi2_point(a))

    def test_marked_point_in_d0(self):
        self.assertEqual(kneading.locate_component(self.cubic, self.cubic.a, resolution=256),
                         ComponentLabel.D0)

    def test_cocritical_in_d1(self):
        self.assertEqual(kneading.locate_component(self.cubic, -2 * self.cubic.a,
                                                   resolution=256),
                         ComponentLabel.D1)

    def test_far_point_outside(self):
        self.assertEqual(kneading.locate_component(self.cubic, 1e3, resolution=256),
                         ComponentLabel.OUTSIDE)

    def test_bounded_map_refused(self):
        with self.assertRaises(DomainError):
            kneading.locate_component(CubicMap(0, 0), 0.1)


class TestKneadingOfMaps(unittest.TestCase):

    def test_period_two_word(self):
        for sign in (1, -1):
            a = 10.0
            cubic = CubicMap(a, dynamics.refine_parameter(a, phi2_point(a, sign), 2))
            word = kneading.kneading_word(cubic, 2, resolution=256)
            self.assertIn(str(word), ('10', '00'))

    def test_wrong_period(self):
        a = 10.0
        cubic = CubicMap(a, phi2_point(a))
        with self.assertRaises(DomainError):
            kneading.kneading_word(cubic, 3, resolution=256)

    def test_short_word(self):
        with self.assertRaises(DomainError):
            kneading.kneading_word(CubicMap(10, 10), 1)


def phi2_branch(a, sign):
    """Root of v^2 + a v + 1 - 2a^2 continuous in a for |a| > 2/3."""
    return a * (-1 + sign * cmath.sqrt(9 - 4 / (a * a))) / 2


class TestWordConstancy(unittest.TestCase):

    def test_along_escape_regions(self):
        words = {}
        for sign in (1, -1):
            found = set()
            for k in range(24):
                a = 10 * cmath.exp(2j * cmath.pi * k / 24)
                v = dynamics.refine_parameter(a, phi2_branch(a, sign), 2)
                found.add(str(kneading.kneading_word(CubicMap(a, v), 2, resolution=256)))
            self.assertEqual(len(found), 1)
            words[sign] = found.pop()
        self.assertEqual(sorted(words.values()), ['00', '10'])

    def test_labels_stable_under_refinement(self):
        a = 6 + 2j
        cubic = CubicMap(a, dynamics.refine_parameter(a, phi2_branch(a, 1), 2))
        points = dynamics.orbit(cubic, cubic.a, 2) + [-2 * cubic.a]
        coarse = kneading.ComponentGrid(cubic, resolution=256, points=points)
        for resolution in (512, 1024):
            fine = kneading.ComponentGrid(cubic, resolution=resolution, points=points)
            for w in points:
                self.assertEqual(fine.locate(w), coarse.locate(w))


if __name__ == '__main__':
    unittest.main()
