from .. import atlas
from .. import color
from .. import exactpoly
from .. import thurston
from ..command_utils import add_recompute_argument, add_workers_argument, period
from ..events import ReportWrittenEvent
from ..uis import get_ui
from ..workspace import Workspace


def parser(subparsers, conf):
    parser = subparsers.add_parser(
        'report',
        help="write the consolidated JSON report and the CSV plot data of period n.")
    parser.add_argument('n', type=period, help='the period, at least 2.')
    parser.add_argument('-m', '--with-components', action='store_true', default=False,
                        dest='with_components',
                        help='include the connected components, computing them if needed.')
    add_recompute_argument(parser, 'results')
    add_workers_argument(parser)
    return parser


def curve_summary(phi, n):
    return {'degree_v': phi.degree_v, 'degree_a': phi.degree_a, 'terms': len(phi),
            'expected_degree_v': exactpoly.phin_degree_v(n),
            'involution_symmetry_sign': exactpoly.involution_symmetry_sign(phi)}


def build_report(ws, n, with_components=False, recompute=False, workers=None):
    """:returns: (report dict, AtlasReport)"""
    phi = ws.phin(n)
    components = None
    if with_components:
        components, _ = ws.components(n, recompute=recompute, workers=workers)
    else:
        components = ws.cached_components(n)
    atlas_report, _ = ws.atlas(n, components=components, recompute=recompute, workers=workers)
    data = {
        'n': n,
        'seed': ws.seed,
        'curve': curve_summary(phi, n),
        'monodromy': None if components is None else components.as_dict(),
        'atlas': atlas_report.as_dict(include_timings=ws.conf['report']['timings']),
        'thurston': [row.as_dict() for row in thurston.obstruction_table(n)],
    }
    return data, atlas_report


def command(conf, args):
    ui = get_ui()
    ws = Workspace(conf)
    data, atlas_report = build_report(ws, args.n, with_components=args.with_components,
                                      recompute=args.recompute, workers=args.workers)
    for kind, path in (('report', ws.databroker.push_report(args.n, data)),
                       ('plot', ws.databroker.push_plot(args.n, atlas.PLOT_HEADER,
                                                        atlas.plot_rows(atlas_report)))):
        ReportWrittenEvent(args.n, path=path).send()
        ui.message('{} written to {}'.format(kind, color.dye_out(path, 'filepath')))
    ws.close()
