from .. import color
from ..command_utils import add_recompute_argument, add_workers_argument, period
from ..uis import get_ui
from ..workspace import Workspace


def parser(subparsers, conf):
    parser = subparsers.add_parser(
        'atlas',
        help="classify the escape regions of S_n by kneading words.")
    parser.add_argument('n', type=period, help='the period.')
    parser.add_argument('-r', '--radius', type=float, default=None,
                        help='radius of the circle |a| = R (default: from the branch points).')
    parser.add_argument('-m', '--with-components', action='store_true', default=False,
                        dest='with_components',
                        help='compute the connected components first if they are not cached.')
    add_recompute_argument(parser, 'atlas')
    add_workers_argument(parser)
    return parser


def region_line(record):
    if record.kneading is None:
        word = color.dye_out('unresolved', 'warning')
    else:
        word = color.dye_out(record.kneading, 'word')
    partner = '-' if record.partner is None else record.partner
    line = '{:>4}  {:>6}  {:>7}  {}'.format(record.region_id, record.cycle_length, partner, word)
    if record.is_distinguished:
        line += '  ' + color.dye_out('distinguished', 'ok')
    return line


def command(conf, args):
    ui = get_ui()
    ws = Workspace(conf)
    components = None
    if args.with_components:
        components, _ = ws.components(args.n, workers=args.workers)
    report, cached = ws.atlas(args.n, radius=args.radius, components=components,
                              recompute=args.recompute, workers=args.workers)
    if cached:
        ui.info('atlas of period {} read from {}'.format(
            args.n, color.dye_out(ws.path('atlas', args.n), 'filepath')))

    ui.message('S_{}: {} escape regions at |a| = {:.6g}, {} up to the involution'.format(
        args.n, color.dye_out(len(report.regions), 'count'), report.radius,
        len(report.quotient_regions())))
    if report.orbit_count is not None:
        ui.message('connected components: {}'.format(report.orbit_count))
    ui.message('region  length  partner  kneading word')
    ui.message('\n'.join(region_line(r) for r in report.regions))
    for record in report.regions:
        for problem in record.problems:
            ui.warning('region {}: {}'.format(record.region_id, problem))
    if report.consistent:
        ui.message('escape regions on the circle: {}'.format(color.dye_out('confirmed', 'ok')))
    elif report.region_clusters is None:
        ui.warning('escape regions on the circle could not be clustered independently')
    unrealized = report.unrealized_words()
    if unrealized:
        ui.message('admissible words without a region: {}'.format(', '.join(unrealized)))
    if report.timings:
        steps = sorted(report.timings.items())
        ui.info('timings: {}'.format(', '.join('{} {:.2f}s'.format(step, seconds)
                                               for step, seconds in steps)))
    ws.close()
