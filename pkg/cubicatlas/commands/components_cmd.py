from .. import color
from .. import monodromy
from ..command_utils import add_recompute_argument, add_workers_argument, period
from ..uis import get_ui
from ..workspace import Workspace


def parser(subparsers, conf):
    parser = subparsers.add_parser(
        'components',
        help="count the connected components of S_n by monodromy.")
    parser.add_argument('n', type=period, help='the period.')
    parser.add_argument('-i', '--involution', action='store_true', default=False,
                        help='also compute how (a, v) -> (-a, -v) acts on the components.')
    add_recompute_argument(parser, 'monodromy')
    add_workers_argument(parser)
    return parser


def involution_on_orbits(pairing, orbits):
    """Index of the orbit each orbit is sent to by the involution."""
    owner = {j: k for k, orbit in enumerate(orbits) for j in orbit}
    return [owner[pairing.deck.images[orbit[0]]] for orbit in orbits]


def command(conf, args):
    ui = get_ui()
    ws = Workspace(conf)
    result, cached = ws.components(args.n, recompute=args.recompute, workers=args.workers)
    if cached:
        ui.info('monodromy of period {} read from {}'.format(
            args.n, color.dye_out(ws.path('monodromy', args.n), 'filepath')))

    ui.message('S_{}: {} connected components (orbit sizes {})'.format(
        args.n, color.dye_out(result.orbit_count, 'count'),
        ', '.join(str(s) for s in result.orbit_sizes)))
    ui.message('degree in v: {}, branch points: {}, largest residual: {:.3g}'.format(
        result.degree, len(result.branch_points), result.max_residual))
    ui.message('monodromy at infinity: {} {}'.format(
        result.infinity.cycle_notation(), list(result.infinity.cycle_type())))
    if result.product_relation_holds:
        ui.message('product of the loops: {}'.format(color.dye_out('consistent', 'ok')))
    else:
        ui.warning('the product of the loops does not match the circle at infinity')

    if args.involution:
        pairing = monodromy.involution_pairing(ws.curve(args.n), result.fiber,
                                               circle_points=conf['monodromy']['circle_points'],
                                               **ws.tracking_options())
        if not pairing.square.is_identity:
            ui.warning('the involution does not square to the identity on the fiber')
        elif not pairing.consistent:
            ui.warning('the square of the involution differs from the full circle')
        images = involution_on_orbits(pairing, result.orbits)
        fixed = sum(1 for k, image in enumerate(images) if image == k)
        ui.message('involution: {} components fixed, {} pairs swapped'.format(
            fixed, (len(images) - fixed) // 2))
        ui.message('points fixed by the involution: {}'.format(len(pairing.symmetric_fixed)))
    ws.close()
