"""Exceptions shared across the package."""


class VerificationError(AssertionError):
    """A degreewise check that should hold for every valid input failed.

    This is the internal bug trap: it fires only if the implementation
    (or the input's validity assumptions) are wrong, never in normal use.
    """


class SchemaError(ValueError):
    """Malformed input file or unknown builtin name."""
