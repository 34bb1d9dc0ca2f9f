"""Exception types raised across the package."""


class IFSError(Exception):
    """Base class for all package errors."""


class ValidationError(IFSError, ValueError):
    """Malformed input: bad interval, bad IFS parameters, bad config."""


class EmptySetError(IFSError, ValueError):
    """An operation that needs a non-empty set received an empty one."""


class PrecisionError(IFSError, ArithmeticError):
    """Refinement width fell below what float arithmetic can resolve."""


class CertificatePreconditionError(IFSError, ValueError):
    """The interval-existence certificate does not apply to this system."""


class InconsistencyError(IFSError, AssertionError):
    """Two independently computed quantities contradict each other."""
