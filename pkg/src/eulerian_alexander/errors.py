"""Exception hierarchy shared by every module.

The CLI maps these onto its exit-code contract, so each class corresponds
to one exit status.
"""


class EulerianAlexanderError(Exception):
    """Base class for all package errors."""


class InputError(EulerianAlexanderError, ValueError):
    """Malformed or out-of-contract input (exit code 2)."""


class EmbeddingError(InputError):
    """A rotation system that does not describe a plane embedding."""


class PreconditionError(InputError):
    """A predicate or operation was called outside its domain."""


class InconsistencyError(EulerianAlexanderError, AssertionError):
    """Two independent computation routes disagreed (exit code 3)."""


class InvariantViolation(EulerianAlexanderError):
    """A verified structural property failed (exit code 4)."""
