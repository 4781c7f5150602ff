"""Exception types shared across the package."""


class InconsistencyError(RuntimeError):
    """Two independent routes to the same quantity disagreed.

    Raised when a numeric test and its structural equivalent give
    different answers. In practice this points at a tolerance or
    grouping bug, never at a property of the input graph.
    """


class Graph6Error(ValueError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class NoWitnessError(RuntimeError):
    """A sampled (inexact) sign-pattern enumeration produced no witness."""
