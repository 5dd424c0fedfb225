"""Exception hierarchy shared by every module."""

from __future__ import annotations


class RdError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(RdError, ValueError):
    """Malformed graph input."""


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class OrderTooLarge(RdError, ValueError):
    pass


class SameVertex(RdError, ValueError):
    pass


class TrivialGraph(RdError, ValueError):
    pass


class Disconnected(RdError, ValueError):
    pass


class LengthMismatch(RdError, ValueError):
    pass


class TooLarge(RdError, ValueError):
    pass


class OddOrder(RdError, ValueError):
    pass


class DegreeOutOfRange(RdError, ValueError):
    pass


class KOutOfRange(RdError, ValueError):
    pass


class BudgetExceeded(RdError):
    """The exact rd search would exceed the configured edge budget."""


class FormatError(RdError, ValueError):
    """Ill-formed input file; the message names the line or field."""
