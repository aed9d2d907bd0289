"""Shared exception types."""

from __future__ import annotations


class ResourceExhausted(RuntimeError):
    """A configurable enumeration bound was exceeded; the message names the
    bound that tripped."""

    def __init__(self, bound_name: str, limit, needed):
        super().__init__(f"{bound_name} exceeded: needed {needed}, limit {limit}")
        self.bound_name = bound_name
        self.limit = limit
        self.needed = needed


class RecoveryError(RuntimeError):
    """Raised when a congruence is not the bend congruence of any single
    polynomial on the requested support (inconsistent or underdetermined
    coefficient-ratio system)."""


class ProblemParseError(ValueError):
    """Problem-file or polynomial syntax error, with 1-based position."""

    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
