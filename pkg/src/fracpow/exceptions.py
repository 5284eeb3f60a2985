"""Exception types shared across the package."""


class FracpowError(Exception):
    """Base class for all errors raised by fracpow."""


class InvalidGraphError(FracpowError, ValueError):
    """Input is not a simple graph, or generator parameters are invalid."""


class BudgetExceeded(FracpowError):
    """Resampling did not remove every bad event within ``max_rounds``.

    The pipeline catches this and retries with longer lists.
    """

    def __init__(self, message, rounds=0, bad=()):
        super().__init__(message)
        self.rounds = rounds
        self.bad = tuple(bad)


class ProofViolation(FracpowError, AssertionError):
    """A structural guarantee of the colouring pipeline did not hold.

    This always indicates a bug upstream, never a user error.
    """


class TooLarge(FracpowError):
    """An exact oracle was asked to work beyond its configured cap."""
