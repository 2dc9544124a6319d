"""Exception hierarchy shared by every module of the package."""


class GraphError(Exception):
    """Base class for all errors raised by :mod:`halin`."""


class InvalidVertex(GraphError, ValueError):
    pass


class SelfLoop(GraphError, ValueError):
    pass


class DuplicateEdge(GraphError, ValueError):
    pass


class ParseError(GraphError, ValueError):
    """Malformed edge-list text. ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class PreconditionViolated(GraphError, ValueError):
    """A local rewrite was requested where its preconditions do not hold.

    ``condition`` names the failed check, e.g. ``"degree"``, ``"triangle"``,
    ``"distinctness"``, ``"freshness"``, ``"path"`` or ``"apex"``.
    """

    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


class InvalidSize(GraphError, ValueError):
    pass


class InvalidProfile(GraphError, ValueError):
    pass


class SpecViolation(GraphError, ValueError):
    pass


class MultiAdjacency(GraphError, ValueError):
    pass


class SizeLimitExceeded(GraphError, ValueError):
    pass


class Unreachable(GraphError, RuntimeError):
    pass
