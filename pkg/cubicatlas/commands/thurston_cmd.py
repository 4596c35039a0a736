from .. import color
from .. import thurston
from ..command_utils import period
from ..uis import get_ui


def parser(subparsers, conf):
    parser = subparsers.add_parser(
        'thurston',
        help="leading eigenvalues of the cyclic curve systems of period n.")
    parser.add_argument('n', type=period, help='the period, at least 2.')
    parser.add_argument('-m', '--matrix', action='store_true', default=False,
                        help='print the transition matrices.')
    return parser


def command(conf, args):
    ui = get_ui()
    ui.message('{:>3}  {:>12}  {:>12}  obstruction'.format('p', 'lambda', '2^(-1/p)'))
    for row in thurston.obstruction_table(args.n):
        verdict = color.dye_out('yes', 'error') if row.obstructed else color.dye_out('no', 'ok')
        ui.message('{:>3}  {:>12.10f}  {:>12.10f}  {}'.format(
            row.partition.p, row.eigenvalue, row.expected, verdict))
        if args.matrix:
            ui.message('     {}'.format(row.partition))
            for entries in row.matrix.serialize():
                ui.message('     ' + ' '.join('{:>3}'.format(x) for x in entries))
