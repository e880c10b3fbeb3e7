"""Shared exception types."""


class ValidationError(ValueError):
    """Raised when an input violates a documented contract.

    Covers malformed matrices, out-of-range parameters, and measurement
    sets that fail their defining trace identities.
    """
