"""Exception types shared across the package."""


class MatchcoverError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(MatchcoverError):
    """Bit vectors from differently-sized edge spaces were combined."""


class NoPerfectMatchingError(MatchcoverError):
    """The graph has no perfect matching."""


class IncompleteEnumerationError(MatchcoverError):
    """A verdict required a complete perfect-matching enumeration, but the
    enumeration hit its cap."""


class NotMatchingCoveredError(MatchcoverError):
    """The operation requires a matching-covered graph."""


class BudgetExhaustedError(MatchcoverError):
    """A backtracking search ran out of its node-expansion budget."""


class DimensionTooLargeError(MatchcoverError):
    """Explicit subspace enumeration was refused: 2^dim too large."""


class InvalidParameterError(MatchcoverError, ValueError):
    """A construction parameter is out of range."""


class EdgeNotInGraphError(MatchcoverError):
    """A named edge id does not exist in the given graph."""


class ColoringMismatchError(MatchcoverError):
    """A supplied edge coloring cannot be re-indexed as required."""


class NotEquivalentError(MatchcoverError):
    """A supplied edge pair failed its equivalent-set precondition."""


class ParseError(MatchcoverError, ValueError):
    """A graph file is malformed.  Carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph6MultigraphError(MatchcoverError):
    """graph6 cannot carry parallel edges."""
