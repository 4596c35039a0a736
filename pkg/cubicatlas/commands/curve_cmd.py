from .. import color
from .. import exactpoly
from .. import monodromy
from ..command_utils import format_complex, period
from ..uis import get_ui
from ..workspace import Workspace


def parser(subparsers, conf):
    parser = subparsers.add_parser(
        'curve',
        help="build Phi_n, verify the divisibility identities and store it.")
    parser.add_argument('n', type=period, help='the period.')
    parser.add_argument('-s', '--smoothness', type=int, default=0, metavar='COUNT',
                        help='check the gradient of Phi_n at COUNT points of the curve.')
    return parser


def _sign(sign):
    return 'none' if sign is None else '{:+d}'.format(sign)


def command(conf, args):
    ui = get_ui()
    ws = Workspace(conf)
    phi = ws.phin(args.n)
    sign = exactpoly.involution_symmetry_sign(phi)

    ui.message('{}: degree {} in v, {} in a, {} terms, largest coefficient {} digits'.format(
        color.dye_out('Phi_{}'.format(args.n), 'period'),
        color.dye_out(phi.degree_v, 'count'), phi.degree_a, len(phi),
        len(str(phi.max_coefficient()))))
    ui.message('degree in v from the divisor sum: {}'.format(exactpoly.phin_degree_v(args.n)))
    ui.message('symmetry under (a, v) -> (-a, -v): {}'.format(_sign(sign)))
    ui.message('stored in {}'.format(color.dye_out(ws.path('phin', args.n), 'filepath')))

    if args.smoothness > 0:
        report = monodromy.smoothness_spot_check(args.n, count=args.smoothness, seed=ws.seed,
                                                 curve=ws.curve(args.n))
        status = color.dye_out('smooth', 'ok') if report.smooth else \
            color.dye_out('singular', 'error')
        ui.message('smoothness: {} ({} points, smallest normalised gradient {:.3g})'.format(
            status, report.points_checked, report.min_gradient))
        for a, v in report.degenerate:
            ui.warning('degenerate parameter a = {}, v = {} (period below {})'.format(
                format_complex(a), format_complex(v), args.n))
        if report.ambiguous:
            ui.warning('{} points with an ambiguous period'.format(report.ambiguous))
    ws.close()
