"""Exception types shared across the package."""

from __future__ import annotations


class PinlefError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PinlefError):
    """Malformed or dimensionally inconsistent input data."""


class InvariantViolation(PinlefError):
    """Data violates a structural invariant (e.g. a one-sided vanishing cycle)."""


class InvalidDecomposition(InvariantViolation):
    """Handlebody data admits no bounding enhancement.

    The constraint system for a genuine closed 3-manifold decomposition is
    always solvable, so an unsolvable system certifies that the class data
    cannot come from one.  The certificate names an inconsistent subset of
    the input curves.
    """

    def __init__(self, message: str, certificate: str | None = None):
        super().__init__(message)
        self.certificate = certificate


class ParseError(InputError):
    """Input document rejected; carries the offending line number."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason
