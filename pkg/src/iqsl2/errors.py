"""Exception types shared across the package."""


class IqslError(Exception):
    """Base class for all package-specific errors."""


class DivisionByZero(IqslError, ZeroDivisionError):
    """Division of a scalar by the zero scalar."""


class DenominatorVanishes(IqslError, ZeroDivisionError):
    """Specialization sent a denominator to zero."""


class RequiresSpecialized(IqslError, ValueError):
    """Operation defined only on varsigma-free (specialized) input."""


class NotIntegral(IqslError, ValueError):
    """Scalar is not a Laurent polynomial, so it cannot be flattened."""


class ZeroBase(IqslError, ValueError):
    """Quantum integer requested in base q^0."""


class NegativeInput(IqslError, ValueError):
    """Factorial-type input outside its domain."""


class UnknownSuite(IqslError, ValueError):
    """Verification suite name not in the registry."""


class ResourceLimit(IqslError, ValueError):
    """Requested bound exceeds the configured safety ceiling."""
