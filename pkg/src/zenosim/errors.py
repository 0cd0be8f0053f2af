"""Exception types shared across the package."""


class ConfigurationError(Exception):
    """A parameter or configuration file violates its contract."""


class ValidationError(ValueError):
    """An input state or array violates a runtime precondition (shape, norm)."""


class NumericalError(Exception):
    """An iterative solver failed to converge to the requested tolerance."""


class CalibrationError(ValueError):
    """A leakage series cannot resolve the requested confidence level."""
