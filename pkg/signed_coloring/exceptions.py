"""
Exception hierarchy for signed graph coloring.

Input-validation errors also derive from ValueError so callers that only care
about "bad input" can catch that.
"""


class SignedColoringError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(SignedColoringError, ValueError):
    """Base class for malformed graphs, colorings, specs and files."""


# Graph construction

class DuplicateEdge(InvalidInput):
    pass


class SelfLoop(InvalidInput):
    pass


class VertexOutOfRange(InvalidInput):
    pass


# Colorings and structure

class DomainMismatch(InvalidInput):
    """A coloring misses incidences of the graph or colors foreign ones."""


class InvalidColoring(InvalidInput):
    pass


class NotACycle(InvalidInput):
    pass


class NotAPath(InvalidInput):
    pass


class AnchorNotInPair(InvalidInput):
    pass


class UnderlyingGraphMismatch(InvalidInput):
    pass


class NotRegular(InvalidInput):
    pass


class InvalidDecomposition(InvalidInput):
    pass


# Family recognition

class NotACactus(InvalidInput):
    pass


class Disconnected(InvalidInput):
    pass


class IsACycle(InvalidInput):
    pass


class NotAWheel(InvalidInput):
    pass


class NotANecklace(InvalidInput):
    pass


class NotCompleteBipartite(InvalidInput):
    pass


class EqualParts(InvalidInput):
    """K_{r,r}: no constructive Δ-coloring is known."""


# Generators

class InvalidSpec(InvalidInput):
    pass


class IndexOutOfRange(InvalidInput):
    pass


# File formats

class GraphSyntaxError(InvalidInput):
    """Malformed line in a signed graph or coloring file."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BadSign(GraphSyntaxError):
    pass


class HeaderMismatch(InvalidInput):
    pass


class BadColoringFile(GraphSyntaxError):
    pass


# Refused or impossible work

class BudgetExceeded(SignedColoringError):
    """The requested search is larger than the configured limit."""


class InternalInvariantError(SignedColoringError):
    """A proven bound or cross-check failed; indicates a bug, never bad input."""
