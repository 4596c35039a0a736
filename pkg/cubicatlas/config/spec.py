from .. import __version__

configspec = """
[main]

# Where the cached polynomials, monodromy results, atlases and reports are
# written.
cache_dir = string(default='~/.cubicatlas')

# Seed of the random generator choosing base points and sample parameters.
# Two runs with the same seed and settings write identical files.
seed = integer(min=0, default=0)

# If true debug mode is on which means exceptions are not catched and
# the full python stack is printed.
debug = boolean(default=False)

# Print progress messages (curve built, loops tracked, regions classified).
verbose = boolean(default=False)

# Threads used for independent loops and kneading samples.
workers = integer(min=1, default=1)


[curve]

# Largest period for which Q_n and Phi_n are built symbolically.
max_period = integer(min=1, default=8)


[dynamics]

# Target accuracy of Green's function values.
tol = float(min=0, default=1e-12)

# Iterations of the free critical point before it is called bounded.
budget = integer(min=1, default=10000)


[monodromy]

# Largest period for which the monodromy is computed.
max_period = integer(min=1, default=5)

# Normalised residual |Phi_n(a, v)| every tracked root must satisfy.
residual_tol = float(min=0, default=1e-8)

# Smallest step, as a fraction of a path segment, before tracking stalls.
min_step = float(min=0, default=1e-12)

# Newton iterations allowed per tracking step.
newton_iterations = integer(min=1, default=8)

# Vertices of the polygon approximating each small circle.
circle_points = integer(min=8, default=64)

# Branch points closer than this (relatively) are merged.
merge_tol = float(min=0, default=1e-8)

# Radius of the circle around a branch point, as a fraction of the distance
# to the nearest other branch point.
clearance = float(min=0, max=0.5, default=0.25)


[kneading]

# Initial and largest side of the grid used to separate D0 from D1.
resolution = integer(min=16, default=512)
max_resolution = integer(min=16, default=4096)

# Sublevel margin, as a fraction of the Green value of the free critical point.
margin_fraction = float(min=0, max=1, default=0.1)


[atlas]

# The circle |a| = R is taken with R = radius_factor * (1 + max |branch point|).
radius_factor = float(min=2, default=4.0)

# Samples per label along the circle (an even number samples a = -R).
samples = integer(min=2, default=8)

# How many times R may be doubled while some sample does not escape.
doublings = integer(min=0, default=3)


[report]

# Store the timings in the written reports (reports are then no longer
# identical between two runs).
timings = boolean(default=False)


[formating]

# Enable bold formatting, if the terminal supports it.
bold    = boolean(default=True)

# Enable italics, if the terminal supports it.
italics = boolean(default=True)

# Enable colors, if the terminal supports it.
color = boolean(default=True)


[theme]

# Available colors are: 'black', 'red', 'green', 'yellow', 'blue', 'purple',
# 'cyan', and 'grey'. Bold colors are available by prefixing 'b' in front of
# the color name ('bblack', 'bred', etc.), italic colors by prefixing 'i',
# and bold italic by prefixing 'bi'. Finally, 'bold', 'italic' and
# 'bolditalic' can be used to apply formatting without changing the color.
# For no color, use an empty string ''

# messages
ok       = string(default='green')
warning  = string(default='yellow')
error    = string(default='red')

# ui elements
filepath = string(default='bold')
word     = string(default='purple')
period   = string(default='cyan')
count    = string(default='bold')


[internal]
# The version of this configuration file. Do not edit.
version = string(min=5, default='{}')

""".format(__version__).split('\n')
