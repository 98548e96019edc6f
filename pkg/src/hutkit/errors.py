"""Exception types shared across the package."""


class HutError(Exception):
    """Base class for all package errors."""


class ContractViolation(HutError):
    """Operation precondition broken, e.g. dimension mismatch."""


class InvalidParameter(HutError):
    """A parameter is outside its admissible range."""


class UndefinedDistance(HutError):
    """Distance requested against an empty target set."""


class UnsupportedVariant(HutError):
    """The requested (variant, dimension, mode) combination has no solver."""


class FormatError(HutError):
    """Malformed instance data, on file input or construction."""


class SizeGuardExceeded(HutError):
    """A brute-force oracle would enumerate more candidates than its cap."""
