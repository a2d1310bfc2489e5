"""Exception hierarchy shared by every module in the package."""


class MilnezetaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MilnezetaError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Gamma-family function evaluated at a non-positive integer."""


class RangeError(DomainError):
    """Argument outside the declared support window of an operation.

    Raised instead of silently losing precision, e.g. for |Im z| beyond
    the gamma-function support strip or a zero scan outside [10, 200].
    """


class ToleranceError(MilnezetaError, ArithmeticError):
    """Adaptive integrator cannot meet the requested local tolerance."""


class AmplitudeCollapseError(MilnezetaError, ArithmeticError):
    """Pinney amplitude fell below the positivity floor during integration."""


class DegenerateAlphaError(MilnezetaError, ValueError):
    """Milne superposition constant alpha is too close to zero.

    The Milne density divides by alpha**2, so the closed form is genuinely
    singular there; no regularization is attempted.
    """


class AbscissaMismatchError(MilnezetaError, ValueError):
    """Two samples expected at the same abscissa disagree."""


class ZeroTableError(MilnezetaError, ValueError):
    """Malformed zero-ordinate table (parse failure or ordering violation)."""
