"""Exception types shared across the package."""

from __future__ import annotations


class TreeCoverError(ValueError):
    """Base class for domain errors (bad input, violated preconditions)."""


class ParseError(TreeCoverError):
    """Malformed or invalid textual input; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(TreeCoverError):
    """An operation was called outside its stated hypotheses."""


class CapExceededError(TreeCoverError):
    """A brute-force oracle was asked to solve an instance above its size cap."""


class InvalidCoverError(TreeCoverError):
    """A cover failed validation against its host."""
