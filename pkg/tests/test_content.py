import os
import unittest

import dotdot
import fake_env

from cubicatlas import content


class TestContent(fake_env.TestFakeFs):

    def test_checks(self):
        os.makedirs('cache')
        content.write_file(os.path.join('cache', 'phin_2.txt'), 'x')
        self.assertTrue(content.check_directory('cache'))
        self.assertTrue(content.check_file(os.path.join('cache', 'phin_2.txt')))
        self.assertFalse(content.check_file('cache', fail=False))
        self.assertFalse(content.check_directory('missing', fail=False))
        with self.assertRaises(IOError):
            content.check_file('cache')
        with self.assertRaises(IOError):
            content.check_directory('missing')

    def test_write_replaces(self):
        os.makedirs('cache')
        path = os.path.join('cache', 'atlas_2.json')
        content.write_file(path, 'first\n')
        content.write_file(path, 'second\n')
        self.assertEqual(content.read_text_file(path), 'second\n')
        self.assertEqual(os.listdir('cache'), ['atlas_2.json'])

    def test_write_needs_directory(self):
        with self.assertRaises(IOError):
            content.write_file(os.path.join('missing', 'phin_2.txt'), 'x')

    def test_newlines_kept(self):
        os.makedirs('cache')
        path = os.path.join('cache', 'plot_2.csv')
        content.write_file(path, 'a,b\r\n1,2\n')
        self.assertEqual(content.read_text_file(path), 'a,b\r\n1,2\n')

    def test_not_text(self):
        os.makedirs('cache')
        path = os.path.join('cache', 'phin_2.txt')
        with open(path, 'wb') as f:
            f.write(b'\xff\xfe\xfa')
        with self.assertRaises(content.UnreadableFile):
            content.read_text_file(path)


if __name__ == '__main__':
    unittest.main()
