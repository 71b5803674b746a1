"""Exception types shared across the package."""


class QuatboundError(Exception):
    """Base class for all package errors."""


class DimensionMismatch(QuatboundError, ValueError):
    pass


class ConvergenceFailure(QuatboundError, ArithmeticError):
    pass


class PreconditionViolation(QuatboundError, ValueError):
    pass


class ZeroLeading(PreconditionViolation):
    pass


class ZeroPolynomial(PreconditionViolation):
    pass


class NonRealCoefficient(QuatboundError, ArithmeticError):
    pass


class SchemaError(QuatboundError, ValueError):
    """Malformed JSON input. The message names the offending field."""
