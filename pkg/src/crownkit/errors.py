"""Exception hierarchy shared by all crownkit modules."""

from __future__ import annotations


class CrownkitError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(CrownkitError):
    """A text input (graph, formula, lists, trace) failed to parse."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class InvalidInstanceError(CrownkitError):
    """A constructed value violates one of its declared invariants."""


class PreconditionError(CrownkitError):
    """An operation was called on input that violates its precondition.

    ``condition`` names the violated condition so callers (and the CLI)
    can report which requirement failed.
    """

    def __init__(self, condition: str, message: str | None = None):
        self.condition = condition
        super().__init__(message or condition)


class GuardError(CrownkitError):
    """A brute-force oracle was asked to solve an instance above its size guard."""


class ContractViolationError(CrownkitError):
    """Internal failure to produce a certified result.  Must never occur."""
