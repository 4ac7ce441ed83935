"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`MextremalError`;
the CLI maps these to exit code 1 and prints the class name.
"""


class MextremalError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class GraphError(MextremalError, ValueError):
    pass


class Loop(GraphError):
    pass


class ColorOutOfRange(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class ColorCountMismatch(GraphError):
    pass


class GraphSyntaxError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyVertexSet(MextremalError, ValueError):
    pass


class ImproperPartition(MextremalError, ValueError):
    pass


class PatternHasNoEdge(MextremalError, ValueError):
    pass


class OddR(MextremalError, ValueError):
    pass


class NotCompleteBipartite(MextremalError, ValueError):
    pass


class LengthMismatch(MextremalError, ValueError):
    pass


class ChiTooSmall(MextremalError, ValueError):
    pass


class MOutOfRange(MextremalError, ValueError):
    pass


class RegimeViolation(MextremalError, ValueError):
    pass


class MatchingTooLarge(MextremalError, ValueError):
    pass


class PartitionNotProperForCore(MextremalError, ValueError):
    pass


class SearchTooLarge(MextremalError, ValueError):
    """An exact search was requested beyond the size it supports."""
