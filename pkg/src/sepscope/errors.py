"""Exception types shared across the package."""


class SepscopeError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(SepscopeError):
    """Matrix shape is inconsistent with the declared subsystem dimensions."""


class NotHermitian(SepscopeError):
    """A Hermitian-only operation received a non-Hermitian matrix."""


class NotUnitary(SepscopeError):
    """A unitary-only operation received a non-unitary matrix."""


class ParamOutOfRange(SepscopeError):
    """A family parameter lies outside its legal domain."""


class ParseError(SepscopeError):
    """A state file could not be parsed; the message names the bad field."""


class InvariantViolation(SepscopeError):
    """A matrix failed the density-matrix invariants (Hermitian, unit trace, PSD)."""


class NoSignChange(SepscopeError):
    """Both bisection endpoints give the same detection verdict."""
