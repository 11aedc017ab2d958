"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-range input (bad vertex ids, loops, multi-edges, ...)."""


class Graph6ParseError(InputError):
    """A graph6 line could not be decoded; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetExceeded(RuntimeError):
    """An exponential search was asked to run past its configured bound."""


class PreconditionError(ValueError):
    """An operation was called on an argument that violates its precondition."""
