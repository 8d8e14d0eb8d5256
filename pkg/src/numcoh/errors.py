"""Exception types shared across the package."""


class NumcohError(Exception):
    """Base class for package-specific errors."""


class ValidationError(NumcohError, ValueError):
    """A parameter violates an operation's documented domain."""


class TruncationError(NumcohError):
    """A Fock-space truncation is too small for the requested accuracy."""


class NumericalError(NumcohError):
    """An internal numerical consistency check failed."""
