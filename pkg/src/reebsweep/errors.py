"""Exception hierarchy shared by all reebsweep modules."""


class ReebSweepError(Exception):
    """Base class for all errors raised by this package."""


class InvalidConfig(ReebSweepError, ValueError):
    """A configuration value violates its documented contract."""


class WindowDegenerate(InvalidConfig):
    """A scan or slice window has nonpositive length."""


class ScanBudgetExceeded(ReebSweepError):
    """Adaptive root scanning hit its refinement depth with the sign-change
    count still changing, so the root set cannot be trusted."""


class InvalidSeed(InvalidConfig):
    """The seed circle parameter is too small for the construction to start."""


class ConstructionFailure(ReebSweepError):
    """The ellipse construction finished but failed numerical verification
    of one of its required properties."""


class CurveOrderError(InvalidConfig):
    """Lower boundary curve exceeds the upper one at a probed point."""


class LevelOutOfRange(ReebSweepError):
    """Requested slice level lies provably outside the region's level range."""


class AmbiguousIncidence(ReebSweepError):
    """Band-to-vertex incidence could not be resolved within the refinement
    budget (usually a sign that an event was missed at this resolution)."""


class NoEndsToAttach(ReebSweepError):
    """Compactification requested on a graph with no qualifying ends."""


class TolClash(ReebSweepError):
    """Two distinct vertex levels fall inside the canonicalization tolerance
    while their footprints overlap, so their order is undefined."""


class ParseError(ReebSweepError):
    """Malformed serialized graph input."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class InvalidDimension(InvalidConfig):
    """Sphere-factor dimension parameters must exceed 1."""


class EmptyRegion(ReebSweepError):
    """Rejection sampling failed to hit the region within its attempt budget."""


class NotRegularLevel(ReebSweepError):
    """A fiber check was requested at a level too close to a critical event."""
