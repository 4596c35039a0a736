# setup
from . import conf_cmd
# curves
from . import curve_cmd
from . import components_cmd
# escape regions
from . import atlas_cmd
from . import kneading_cmd
from . import thurston_cmd
# output
from . import report_cmd
