"""Exception hierarchy.

Each class maps to one CLI exit code (see :mod:`compoundnorms.cli`).
"""


class CompoundNormsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(CompoundNormsError, ValueError):
    """Shape mismatch: empty input, non-square matrix, wrong subset size."""


class DomainError(CompoundNormsError, ValueError):
    """Input outside an operation's mathematical domain."""


class ResourceError(CompoundNormsError):
    """A size guard was breached."""


class NumericalFailure(CompoundNormsError, ArithmeticError):
    """An iterative kernel did not converge."""

    def __init__(self, message, iterations=None):
        super().__init__(message)
        self.iterations = iterations


class ParseError(CompoundNormsError, ValueError):
    """Malformed matrix file or complex literal."""
