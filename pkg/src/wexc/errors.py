"""Error types shared across the library and mapped to CLI exit codes."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed expression or group-file input.

    ``position`` is a 0-based character offset into the offending text
    when one is known, else None.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class CapExceeded(RuntimeError):
    """A closure or classification walked past its configured element cap."""


class InternalInvariantError(RuntimeError):
    """An internal consistency condition failed; indicates a bug, not bad input."""
