"""Exception hierarchy shared by the library, harness and CLI."""

from __future__ import annotations


class KESquareError(Exception):
    """Base class for every error raised by ke_square."""


class GraphConstructionError(KESquareError, ValueError):
    """An edge list does not describe a simple undirected graph."""


class Graph6Error(KESquareError, ValueError):
    """Malformed graph6 input. `offset` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int, line: int | None = None) -> None:
        self.reason = message
        self.offset = offset
        self.line = line
        location = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} ({location})")


class EdgeListError(KESquareError, ValueError):
    """Malformed edge-list input. `line` is 1-based."""

    def __init__(self, message: str, line: int) -> None:
        self.line = line
        super().__init__(f"{message} (line {line})")


class UnsupportedSizeError(KESquareError, ValueError):
    """The graph is too large for the short graph6 header."""


class NotATreeError(KESquareError, ValueError):
    """A tree-only algorithm received a graph that is not a tree."""


class CorpusRangeError(KESquareError, ValueError):
    """A built-in corpus generator was asked for an unsupported order."""


class ChainViolationError(KESquareError):
    """The invariant chain alpha(G^2) <= theta(G^2) <= gamma <= i <= alpha <= theta failed."""

    def __init__(self, graph6: str, values: tuple[int, ...]) -> None:
        self.graph6 = graph6
        self.values = values
        super().__init__(f"invariant chain violated for {graph6}: {values}")


class UnknownCheckError(KESquareError, ValueError):
    """A verification check name that is not registered."""
