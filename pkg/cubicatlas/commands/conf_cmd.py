import os

from .. import color
from .. import config
from ..uis import get_ui


def parser(subparsers, conf):
    parser = subparsers.add_parser('conf',
            help='show the configuration in use')
    parser.add_argument('-w', '--write', action='store_true', default=False,
                        help='write it, defaults included, to the configuration file.')
    return parser


def command(conf, args):
    ui = get_ui()
    path = conf.filename or config.get_confpath()
    state = 'found' if os.path.exists(path) else 'missing, defaults in use'
    ui.message('configuration file: {} ({})'.format(color.dye_out(path, 'filepath'), state))
    for name, section in conf.items():
        ui.message('[{}]'.format(name))
        for key, value in section.items():
            ui.message('{} = {}'.format(key, value))

    if args.write:
        config.save_conf(conf, path=path)
        config.check_conf(config.load_conf(path=path))
        ui.message('The configuration file was updated.')
