"""Exception types shared across the package."""


class NCKeplerError(Exception):
    """Base class for all nckepler errors."""


class DomainError(NCKeplerError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ConstraintError(DomainError):
    """Quantum numbers violate the channel's selection rules."""


class NoStateError(DomainError):
    """No bound state exists for the requested (channel, j)."""


class GeometryError(NCKeplerError, ValueError):
    """Finite-difference stencil would leave the open coordinate domain."""


class CapacityError(NCKeplerError, ValueError):
    """Requested size exceeds a configured capacity limit."""


class EvaluationError(NCKeplerError, RuntimeError):
    """An integrand or kernel produced a non-finite or invalid value.

    ``node`` carries the offending evaluation point when known.
    """

    def __init__(self, message, node=None):
        super().__init__(message)
        self.node = node
