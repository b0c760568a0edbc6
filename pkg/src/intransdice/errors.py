"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-domain input (bad permutation, overlapping sets, parse failure)."""


class PreconditionError(ValueError):
    """Input is well formed but violates an operation's precondition."""


class ConstructionError(RuntimeError):
    """A construction produced output that failed its own invariant check.

    This always indicates a defect; it is never raised for bad user input.
    """
