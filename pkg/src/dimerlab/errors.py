"""Exception hierarchy shared across dimerlab."""


class DimerlabError(Exception):
    """Base class for every error raised by this package."""


class GraphError(DimerlabError, ValueError):
    """Malformed graph: bad endpoint, loop, unexpected parallel edge, unknown id."""


class PreconditionError(DimerlabError, ValueError):
    """An operation was called on a graph outside its stated hypotheses."""


class CapacityError(DimerlabError, RuntimeError):
    """The frontier DP would exceed its configured width cap."""

    def __init__(self, message, width=None, cap=None):
        super().__init__(message)
        self.width = width
        self.cap = cap


class ClaimViolation(DimerlabError, AssertionError):
    """A structural claim checked during the K4-block bijection failed."""
