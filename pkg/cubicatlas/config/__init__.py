from .conf import (get_confpath, load_default_conf, load_conf, save_conf,
                   check_conf, ConfigurationNotFound, ConfigurationError)
from .conf import post_process_conf
