"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class PathAlgError(Exception):
    """Base class for every error raised by this package."""


class GraphError(PathAlgError, ValueError):
    pass


class NotConnected(GraphError):
    pass


class NoSpanningTree(GraphError):
    """The allowed edge set does not connect all vertices."""


class PropertyFViolation(PathAlgError, ValueError):
    pass


class EdgeNotInY1(PathAlgError, KeyError):
    pass


class AmbientMismatch(PathAlgError, ValueError):
    """Operands live over different graphs or factor universes."""


class NonAlternatingWord(PathAlgError, ValueError):
    pass


class CoxeterError(PathAlgError, ValueError):
    pass


class ParseError(PathAlgError, ValueError):
    """Input text could not be parsed; ``line``/``pos`` locate the problem."""

    def __init__(self, message: str, line: int | None = None, pos: int | None = None):
        self.message = message
        self.line = line
        self.pos = pos
        where = []
        if line is not None:
            where.append(f"line {line}")
        if pos is not None:
            where.append(f"col {pos + 1}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
