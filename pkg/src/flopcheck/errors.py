"""Exception hierarchy. Everything derives from ValueError so callers can catch broadly."""


class FlopcheckError(ValueError):
    pass


class InvalidWeightError(FlopcheckError):
    """A weight is not weakly decreasing, or has the wrong length for its context."""


class LengthMismatchError(FlopcheckError):
    pass


class DomainError(FlopcheckError):
    """Arguments outside the range where an operation is defined."""


class UnsupportedError(FlopcheckError):
    """The request is well-formed but outside what the engine computes."""
