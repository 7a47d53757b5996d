"""Exception hierarchy shared by the library and the command-line front end."""

from __future__ import annotations


class GentleError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class QuiverFormatError(GentleError, ValueError):
    """Malformed ``.quiver`` document or string literal."""

    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(GentleError, ValueError):
    """An input violates a mathematical precondition (not gentle, not a string, ...)."""


class InfiniteDimensionalError(DomainError):
    pass


class NotRepresentationFiniteError(DomainError):
    pass


class SingularMatrixError(DomainError, ZeroDivisionError):
    pass


class NonIntegralError(DomainError):
    pass


class ResourceCapError(GentleError, RuntimeError):
    """A configured enumeration or dimension cap was exceeded."""

    exit_code = 3
