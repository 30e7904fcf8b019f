"""Exception types shared across the package."""


class PosysError(Exception):
    """Base class for all package-specific errors."""


class DomainError(PosysError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DimensionError(PosysError, ValueError):
    """Vector operands have incompatible lengths."""


class RangeError(PosysError, ArithmeticError):
    """A quantity is requested where it is no longer representable.

    Raised e.g. for hazard rates at times where the survival function has
    underflowed to zero: an explicit failure beats a silent 0/0.
    """


class GridError(PosysError, ValueError):
    """An evaluation grid is misconfigured."""


class EvaluationError(PosysError, RuntimeError):
    """A function produced a non-finite value on the evaluation grid."""

    def __init__(self, message: str, t: float | None = None):
        super().__init__(message)
        self.t = t


class GenerationError(PosysError, RuntimeError):
    """A randomized instance generator could not satisfy its constraint."""
