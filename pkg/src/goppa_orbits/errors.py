"""Exception types shared across the package."""


class HypothesisError(ValueError):
    """A parameter set violates a required arithmetic hypothesis.

    The message names the specific failed condition.
    """


class GuardError(ValueError):
    """An enumeration or materialization guard ceiling was exceeded."""


class InternalCheckError(RuntimeError):
    """An internal exactness or consistency assertion failed.

    This always signals an arithmetic bug, never bad user input.
    """
