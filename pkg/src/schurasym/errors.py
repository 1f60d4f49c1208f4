"""Exception hierarchy shared by every module."""


class SchurAsymError(Exception):
    """Base class; the CLI maps it to exit status 1."""


class ArgumentError(SchurAsymError, ValueError):
    pass


class DomainError(SchurAsymError, ValueError):
    """Input lies in an excluded set (pole, branch cut, zero with negative parts)."""


class PoleError(DomainError):
    pass


class BranchError(DomainError):
    pass


class SingularSpecializationError(SchurAsymError):
    """Both bialternant determinants vanish after confluent expansion."""

    def __init__(self, msg, point=None):
        super().__init__(msg)
        self.point = point


class DegeneracyError(SchurAsymError):
    """A Vandermonde denominator vanishes (repeated variables)."""


class PreconditionError(SchurAsymError):
    pass


class QuadratureError(SchurAsymError):
    pass


class ConvergenceError(SchurAsymError):
    def __init__(self, msg, trace=None):
        super().__init__(msg)
        self.trace = trace or []


class PrecisionError(SchurAsymError):
    pass


class CapacityError(SchurAsymError):
    pass


class IdentityViolationError(SchurAsymError):
    pass


class DegenerateProfileError(SchurAsymError):
    pass


class TruncationError(SchurAsymError):
    """Certified tail bound exceeds the requested tolerance."""
