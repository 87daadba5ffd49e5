class LabError(Exception):
    """Base exception for every failure raised by poroshock"""
    pass


class InvalidFluxError(LabError):
    """Raised when a flux violates f(0) = 0 or the convexity floor"""
    pass


class DegenerateJumpError(LabError):
    """Raised when a Rankine-Hugoniot speed is requested for equal states"""
    pass


class SpanTooSmallError(LabError):
    """Raised when the profile integration window misses the free boundary"""
    pass


class InvalidStateError(LabError):
    """Raised when a field has negative cells or the wrong shape"""
    pass


class StepRejectedError(LabError):
    """Raised when a time step exceeds the monotonicity (CFL) bound"""
    pass


class RunInvalidError(LabError):
    """Raised when a perturbation reaches the far-field boundary cells"""
    pass


class SchemeInstabilityError(LabError):
    """Raised when the regularized run leaves its invariant band [1/n, M^m]"""
    pass


class AlignmentError(LabError):
    """Raised when a translation is not an integer multiple of dx"""
    pass


class OrderingError(LabError):
    """Raised when a comparison check receives unordered data"""
    pass


class WindowError(LabError):
    """Raised when the traveling window leaves the computational domain"""
    pass


class RangeError(LabError, ValueError):
    """Raised when an exponent or sample lies outside its admissible range"""
    pass


class InsufficientDataError(LabError):
    """Raised when a fit window holds too few usable records"""
    pass


class PreconditionError(LabError):
    """Raised when a verifier's hypothesis does not hold for its input"""
    pass


class ConfigError(LabError):
    """Raised for invalid experiment configuration (usage error)"""

    def __init__(self, message: str, fields: dict = None):
        super().__init__(message)
        self.fields = fields or {}


class SchemaMismatchError(LabError):
    """Raised when a baseline artifact and the current one disagree on columns"""
    pass
