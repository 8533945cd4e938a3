"""Exception hierarchy shared by every module of the package."""


class UnramifiedError(Exception):
    """Base class for mathematical failures (CLI exit code 2)."""

    code = "MathError"


class NonUnit(UnramifiedError, ZeroDivisionError):
    """Raised when an inverse of a non-unit is requested.

    ``valuation`` is the p-adic valuation of the offending value (capped at
    the working precision).
    """

    code = "NonUnit"

    def __init__(self, message, valuation=None):
        super().__init__(message)
        self.valuation = valuation


class NotPrime(UnramifiedError, ValueError):
    code = "NotPrime"


class NotMonic(UnramifiedError, ValueError):
    code = "NotMonic"


class NotIrreducible(UnramifiedError, ValueError):
    code = "NotIrreducible"


class BadDegree(UnramifiedError, ValueError):
    code = "BadDegree"


class PreconditionFailed(UnramifiedError, ValueError):
    code = "PreconditionFailed"


class ZeroDivisorPivot(UnramifiedError, ArithmeticError):
    """A Euclidean descent over Z/p^N hit a leading coefficient that is a
    non-zero non-unit."""

    code = "ZeroDivisorPivot"


class InstanceTooLarge(UnramifiedError, ValueError):
    code = "InstanceTooLarge"


class InternalInconsistency(UnramifiedError, AssertionError):
    code = "InternalInconsistency"


class ContextMismatch(ValueError):
    """Operands belong to different rings (usage error, not mathematical)."""
