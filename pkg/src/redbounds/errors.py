"""Exception types shared across the package."""


class RedboundsError(Exception):
    """Base class for all package errors."""


class ParseError(RedboundsError):
    """Raised on malformed polynomial text.  Carries the offending position."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


class RingMismatchError(RedboundsError):
    """Operands live in different rings or use incompatible orders."""


class CapExceededError(RedboundsError):
    """A configured cap (power cap, colon chain cap, horizon) was hit.

    This is a structured outcome, never silent truncation: callers either
    propagate it or downgrade the result to 'uncertified'.
    """

    def __init__(self, what, cap):
        super().__init__("cap exceeded: %s (cap=%d)" % (what, cap))
        self.what = what
        self.cap = cap


class NotMPrimaryError(RedboundsError):
    """Operation requires an m-primary ideal (finite colength)."""


class ClosureError(RedboundsError):
    """An internal consistency check of the Ratliff-Rush machinery failed.

    Signals an upstream bug, not bad user input."""
