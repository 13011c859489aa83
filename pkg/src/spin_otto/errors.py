"""Exception types shared across the package."""


class SpinOttoError(ValueError):
    """Base class for all validation failures raised by ``spin_otto``."""


class DomainError(SpinOttoError):
    """An argument lies outside the mathematical domain of an operation."""


class ConfigurationError(SpinOttoError):
    """A cycle specification violates its invariants."""


class RegimeError(SpinOttoError):
    """A formula is queried outside the parameter regime where it applies."""
