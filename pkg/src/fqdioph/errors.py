"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid input parameters (bad prime, degree, field spec, ...)."""


class DomainError(ArithmeticError):
    """Operation undefined at this input, e.g. inverting zero."""


class HypothesisError(ValueError):
    """An input violates the hypothesis of the bound being checked."""


class DistinctnessError(ValueError):
    """A construction produced repeated elements."""


class SizePolicyError(ValueError):
    """Field or graph exceeds the configured size policy."""


class ConstructionError(ArithmeticError):
    """A construction could not produce a verified tuple."""
