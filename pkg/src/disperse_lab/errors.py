"""Exception types shared across the toolkit."""


class DisperseLabError(Exception):
    """Base class for all toolkit-specific failures."""


class DomainTooSmallError(DisperseLabError, ValueError):
    """A potential does not decay below tolerance at the box edge.

    Carries the half-width that would be large enough.
    """

    def __init__(self, message, required_half_width):
        super().__init__(message)
        self.required_half_width = required_half_width


class HypothesisViolationError(DisperseLabError, ValueError):
    """An operation required V >= 0 or x V' <= 0 and the potential fails it."""


class UntrustedWindowError(DisperseLabError, ValueError):
    """A requested time lies beyond the wraparound horizon of the grid."""


class CutoffExceedsBoxError(DisperseLabError, ValueError):
    """Cutoff support [-2R, 2R] does not fit inside the periodic box."""


class JostOverflowError(DisperseLabError, ArithmeticError):
    """Jost integration grew beyond the overflow guard before the far edge."""


class BlowUpSuspectedError(DisperseLabError, ArithmeticError):
    """Sup-norm guard tripped during nonlinear evolution."""


class InvalidWindowError(DisperseLabError, ValueError):
    """A fit window contains too few samples or exits the trusted horizon."""
