from .. import color
from .. import dynamics
from .. import kneading
from ..command_utils import complex_number, period
from ..errors import DomainError
from ..uis import get_ui


def parser(subparsers, conf):
    parser = subparsers.add_parser(
        'kneading',
        help="kneading word of an escaping map, or the flips leading a word to 1...10.")
    parser.add_argument('n', type=period, nargs='?', default=None, help='the period.')
    parser.add_argument('-a', type=complex_number, default=None,
                        help='marked critical point.')
    parser.add_argument('-v', type=complex_number, default=None, help='critical value.')
    parser.add_argument('-p', '--polish', action='store_true', default=False,
                        help='refine v by Newton on f^n(a) = a first.')
    parser.add_argument('-k', '--word', default=None,
                        help='a word such as 0110 instead of a map.')
    return parser


def print_walk(ui, word):
    path = kneading.flip_path_to_distinguished(word)
    ui.message('flip path: {}'.format(' '.join(str(m) for m in path) or 'none'))
    ui.message(' -> '.join(str(w) for w in kneading.flip_walk(word)))


def command(conf, args):
    ui = get_ui()
    if args.word is not None:
        word = kneading.KneadingWord.from_string(args.word)
    else:
        if args.n is None or args.a is None or args.v is None:
            raise DomainError(message='give a period with -a and -v, or a word with --word')
        v = args.v
        if args.polish:
            v = dynamics.refine_parameter(args.a, v, args.n)
            ui.info('polished v = {!r}'.format(v))
        cubic = dynamics.CubicMap(args.a, v)
        escape = dynamics.classify_escape(cubic, tol=conf['dynamics']['tol'],
                                          budget=conf['dynamics']['budget'])
        ui.message('escape class: {}'.format(escape.value))
        if escape is not dynamics.EscapeClass.ESCAPE_LOCUS:
            raise DomainError(message='{} is not in the escape locus'.format(cubic))
        green = dynamics.green(cubic, -cubic.a, tol=conf['dynamics']['tol'],
                               budget=conf['dynamics']['budget'])
        word = kneading.kneading_word(cubic, args.n,
                                      margin=conf['kneading']['margin_fraction'] * green.value,
                                      resolution=conf['kneading']['resolution'],
                                      max_resolution=conf['kneading']['max_resolution'],
                                      tol=conf['dynamics']['tol'],
                                      budget=conf['dynamics']['budget'])
    ui.message('kneading word: {}'.format(color.dye_out(word, 'word')))
    if word.is_distinguished:
        ui.message(color.dye_out('distinguished', 'ok'))
    print_walk(ui, word)
