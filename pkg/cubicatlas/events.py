_listeners = []


class Event(object):
    """Something that happened, delivered to every listener of its class
    or of one of its base classes, in registration order."""

    def send(self):
        for cls, f, extra in list(_listeners):
            if isinstance(self, cls):
                f(self, *extra)

    @classmethod
    def listen(cls, *extra):
        """Decorator registering `f(event, *extra)`; `f` itself is returned unchanged."""
        def register(f):
            _listeners.append((cls, f, extra))
            return f
        return register

    @classmethod
    def forget(cls, f):
        _listeners[:] = [entry for entry in _listeners
                         if not (entry[0] is cls and entry[1] == f)]


# Command events

class PreCommandEvent(Event):
    description = "Triggered before the command is executed"


class PostCommandEvent(Event):
    description = "Triggered after the command is executed"


# Progress of the computations

class ProgressEvent(Event):
    _format = "Progress on period {n}."

    def __init__(self, n, **fields):
        self.n = n
        self.fields = fields

    @property
    def description(self):
        return self._format.format(n=self.n, **self.fields)

# Used by datacache.DataCache.phin()
class CurveBuiltEvent(ProgressEvent):
    _format = "Built Phi_{n} (degree {degree} in v, {terms} terms, {source})."

# Used by monodromy.branch_locus()
class BranchPointsEvent(ProgressEvent):
    _format = "Found {count} branch points for period {n}."

# Used by monodromy.connected_components()
class LoopTrackedEvent(ProgressEvent):
    _format = "Period {n}: loop {index}/{total} around a = {beta:.6g} gives {cycles}."

# Used by monodromy.smoothness_spot_check()
class DegenerateParameterEvent(ProgressEvent):
    _format = "Period {n}: degenerate parameter a = {a:.6g}, v = {v:.6g} (period {period})."

# Used by atlas.build_atlas()
class RadiusDoubledEvent(ProgressEvent):
    _format = "Period {n}: sample not escaping at |a| = {radius:.6g}, doubling the radius."

# Used by atlas.build_atlas()
class RegionClassifiedEvent(ProgressEvent):
    _format = "Period {n}: region {region} has kneading word {word} ({samples} samples)."

# Used by the report command
class ReportWrittenEvent(ProgressEvent):
    _format = "Wrote {path}."
