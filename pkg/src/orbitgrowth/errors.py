"""Exception types shared across the package."""


class OrbitGrowthError(Exception):
    """Base class for all package errors."""


class InputError(OrbitGrowthError, ValueError):
    pass


class CapacityError(OrbitGrowthError, RuntimeError):
    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class ConstructionError(OrbitGrowthError, ValueError):
    pass


class PreconditionError(OrbitGrowthError, ValueError):
    pass


class UnsupportedError(OrbitGrowthError, NotImplementedError):
    pass


class InternalError(OrbitGrowthError, AssertionError):
    """Raised when two computations that must agree do not."""
