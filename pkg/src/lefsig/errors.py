"""Exception types shared across the package."""


class LefsigError(Exception):
    """Base class for package errors."""


class InputError(LefsigError):
    """Bad caller-supplied data: shapes, malformed documents, non-Lagrangian spans."""


class InternalConsistencyError(LefsigError):
    """A mathematical guarantee failed to hold at runtime.

    Raised when a quantity the theory promises (a symmetric correction form,
    a radical containment, a nonsingular induced form) comes out wrong.
    Indicates a bug, never bad input.
    """
