import os

import configobj
import validate

from .spec import configspec


DFT_CONFIG_PATH = os.path.expanduser('~/.cubicatlasrc')
CONFIG_ENV = 'CUBICATLASRC'

# (section, smaller key, section, larger key): the first value may not exceed the second.
ORDERED_VALUES = [
    ('kneading', 'resolution', 'kneading', 'max_resolution'),
    ('monodromy', 'max_period', 'curve', 'max_period'),
]


class ConfigurationNotFound(IOError):

    def __init__(self, path):
        super(ConfigurationNotFound, self).__init__(
            "No configuration found at path {}. Check the --config argument or "
            "the {} environment variable.".format(path, CONFIG_ENV))


class ConfigurationError(ValueError):

    def __init__(self, problems):
        self.problems = problems
        super(ConfigurationError, self).__init__(
            "invalid configuration values: {}".format(', '.join(problems)))


def _validation_problems(conf, results):
    return ['[{}] {}'.format(']['.join(sections), key or '')
            for sections, key, _ in configobj.flatten_errors(conf, results)]


def _ordering_problems(conf):
    return ['[{}] {} above [{}] {}'.format(s1, k1, s2, k2)
            for s1, k1, s2, k2 in ORDERED_VALUES
            if conf[s1][k1] > conf[s2][k2]]


def check_conf(conf):
    """Validate against the configspec, filling the defaults, then check the
    values that bound each other."""
    results = conf.validate(validate.Validator(), copy=True)
    if results is not True:
        raise ConfigurationError(_validation_problems(conf, results))
    problems = _ordering_problems(conf)
    if problems:
        raise ConfigurationError(problems)


def post_process_conf(conf):
    check_conf(conf)
    conf['main']['cache_dir'] = os.path.expanduser(conf['main']['cache_dir'])
    return conf


def load_default_conf():
    return post_process_conf(configobj.ConfigObj(configspec=configspec))


def get_confpath():
    """The file named by $CUBICATLASRC, ~/.cubicatlasrc otherwise."""
    if CONFIG_ENV in os.environ:
        return os.path.abspath(os.path.expanduser(os.environ[CONFIG_ENV]))
    return DFT_CONFIG_PATH


def load_conf(path=None):
    """Configuration from `path`, which must exist.

    Without a path, a missing file at the default location gives the defaults.
    """
    if path is None:
        path = get_confpath()
        if not os.path.exists(path):
            return load_default_conf()
    elif not os.path.exists(path):
        raise ConfigurationNotFound(path)
    conf = configobj.ConfigObj(path, configspec=configspec)
    conf.filename = path
    return post_process_conf(conf)


def save_conf(conf, path=None):
    conf.filename = path or conf.filename or get_confpath()
    with open(conf.filename, 'wb') as f:
        conf.write(outfile=f)
