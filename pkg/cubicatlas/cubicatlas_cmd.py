import os
import sys
import argparse
import collections

from . import uis
from . import config
from . import events
from . import commands
from .__init__ import __version__


CORE_CMDS = collections.OrderedDict([
    ('conf', commands.conf_cmd),

    ('curve', commands.curve_cmd),
    ('components', commands.components_cmd),

    ('atlas', commands.atlas_cmd),
    ('kneading', commands.kneading_cmd),
    ('thurston', commands.thurston_cmd),

    ('report', commands.report_cmd),
])


@events.ProgressEvent.listen()
def show_progress(event):
    uis.get_ui().progress(event.description)


def override_conf(conf, top_args):
    """Command line values take precedence over the configuration file."""
    if top_args.seed is not None:
        conf['main']['seed'] = top_args.seed
    if top_args.tol is not None:
        conf['dynamics']['tol'] = top_args.tol
    if top_args.budget is not None:
        conf['dynamics']['budget'] = top_args.budget
    if top_args.cache_dir is not None:
        conf['main']['cache_dir'] = os.path.expanduser(top_args.cache_dir)
    if top_args.verbose:
        conf['main']['verbose'] = True
    if top_args.debug:
        conf['main']['debug'] = True
    return conf


def top_parser():
    """Options read before the configuration is loaded."""
    desc = 'Cubicatlas: components and escape regions of the periodic curves S_n of cubic maps.'
    parser = argparse.ArgumentParser(prog="cubicatlas", add_help=False, description=desc)
    parser.add_argument("-c", "--config", type=str, metavar="FILE",
                        help="configuration file to use instead of ~/.cubicatlasrc")
    parser.add_argument('--force-colors', dest='force_colors', action='store_true',
                        default=False, help='keep colors when the output is not a terminal')
    parser.add_argument('--seed', type=int, default=None,
                        help='seed of every random choice (default: main.seed).')
    parser.add_argument('--tol', type=float, default=None,
                        help='tolerance on Green values (default: dynamics.tol).')
    parser.add_argument('--budget', type=int, default=None,
                        help='iteration budget of the escape tests (default: dynamics.budget).')
    parser.add_argument('--cache-dir', dest='cache_dir', default=None, metavar='DIR',
                        help='where curves and results are stored (default: main.cache_dir).')
    parser.add_argument('--verbose', action='store_true', default=False,
                        help='print the progress of long computations.')
    parser.add_argument('--debug', action='store_true', default=False,
                        help='show the traceback of errors.')
    return parser


def add_commands(parser, conf):
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('-h', '--help', action='help', default=argparse.SUPPRESS,
                        help='Show this help message and exit.')
    subparsers = parser.add_subparsers(title="commands", dest="command")
    for cmd_mod in CORE_CMDS.values():
        cmd_mod.parser(subparsers, conf).set_defaults(func=cmd_mod.command)


def execute(raw_args=sys.argv):
    try:
        parser = top_parser()
        top_args, remaining_args = parser.parse_known_args(raw_args[1:])
        conf = override_conf(config.load_conf(path=top_args.config), top_args)
        uis.init_ui(conf, force_colors=top_args.force_colors)

        add_commands(parser, conf)
        args = parser.parse_args(remaining_args)
        if not args.command:
            # no command is a usage error
            parser.print_help(file=sys.stderr)
            sys.exit(2)

        events.PreCommandEvent().send()
        args.prog = "cubicatlas"
        args.func(conf, args)

    except Exception as e:
        uis.get_ui().handle_exception(e)
    finally:
        events.PostCommandEvent().send()
