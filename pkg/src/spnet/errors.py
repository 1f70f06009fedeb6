"""Exception hierarchy shared by every spnet module."""


class SpnError(Exception):
    """Base class for all errors raised by spnet."""


class ModelFormatError(SpnError, ValueError):
    """A model file could not be parsed.

    ``line`` is set for syntax errors, ``field`` for schema errors
    (a dotted path such as ``arcs[2].sign``).
    """

    def __init__(self, message, *, line=None, field=None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class DimensionError(SpnError, ValueError):
    """A marking does not match the number of places of a structure."""


class StructureError(SpnError, ValueError):
    """An SPN structure could not be built (non-bipartite arc, duplicate arc, ...)."""


class VertexRangeError(SpnError, IndexError):
    """A vertex id or label does not exist in the structure."""


class VertexKindError(SpnError, TypeError):
    """A place was given where a transition is required, or vice versa."""


class NotEnabledError(SpnError):
    """Attempt to fire a transition that is not enabled."""


class StepDisabledError(NotEnabledError):
    """A firing sequence hit a disabled transition.

    ``index`` is the 0-based position of the failing step, ``trace`` the
    markings reached before it (always starting with the initial marking).
    """

    def __init__(self, index, transition, trace, name=None):
        self.index = index
        self.transition = transition
        self.trace = tuple(trace)
        super().__init__(
            f"step {index + 1}: transition {name or transition!r} is not enabled at {self.trace[-1]}"
        )


class PreconditionError(SpnError, ValueError):
    """An operation was called outside its documented domain."""


class NotOrdinaryError(PreconditionError):
    """Domination and synthesis need every arc weight to be 1."""


class DisconnectedSubtreeError(PreconditionError):
    """A node set of a reachability tree is not a connected subtree."""


class CapacityError(SpnError):
    """An exhaustive search exceeds its configured size limit."""


class TopologyError(PreconditionError):
    """A net does not have the hub-and-spoke shape required by similarity analysis."""
