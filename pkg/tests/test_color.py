import io
import unittest

import dotdot
from cubicatlas import color
from cubicatlas.config import load_default_conf


class TestColor(unittest.TestCase):

    def tearDown(self):
        color.COLORS_OUT = color.generate_colors(io.StringIO(), color=False, bold=False,
                                                 italic=False)
        color.COLORS_ERR = dict(color.COLORS_OUT)

    def test_no_support_no_codes(self):
        colors = color.generate_colors(io.StringIO())
        self.assertEqual(colors['red'], '')
        self.assertEqual(colors['end'], '')

    def test_forced(self):
        colors = color.generate_colors(io.StringIO(), force_colors=True)
        self.assertEqual(colors['red'], '\033[38;5;1m')
        self.assertEqual(colors['bired'], '\033[1;3;38;5;1m')
        self.assertEqual(colors['end'], '\033[0m')

    def test_forced_bold_only(self):
        colors = color.generate_colors(io.StringIO(), color=False, italic=False,
                                       force_colors=True)
        self.assertEqual(colors['red'], '')
        self.assertEqual(colors['bred'], '\033[1m')

    def test_undye(self):
        colors = color.generate_colors(io.StringIO(), force_colors=True)
        s = '{}period{} {}10{}'.format(colors['cyan'], colors['end'], colors['bpurple'],
                                       colors['end'])
        self.assertEqual(color.undye(s), 'period 10')

    def test_setup_theme(self):
        color.setup(load_default_conf(), force_colors=True)
        self.assertEqual(color.dye_out('10', 'word'), '\033[38;5;5m10\033[0m')
        self.assertEqual(color.undye(color.dye_err('oops', 'error')), 'oops')


if __name__ == '__main__':
    unittest.main()
