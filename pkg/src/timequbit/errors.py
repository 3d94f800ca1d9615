"""Exception types raised by the library."""


class TimeQubitError(ValueError):
    """Base class for all library errors."""


class DimensionError(TimeQubitError):
    """An operand does not have the required shape."""


class PreconditionError(TimeQubitError):
    """An operator fails a required structural property (e.g. Hermiticity)."""


class InvalidStateError(TimeQubitError):
    """A state vector or density matrix is not normalized, Hermitian or positive."""


class DomainError(TimeQubitError):
    """A scalar or vector parameter lies outside its allowed range."""


class DegenerateError(DomainError):
    """A direction or field is undefined because its magnitude vanishes."""
