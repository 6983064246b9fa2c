"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain on which the quantity is defined."""


class PreconditionError(ValueError):
    """The inputs are valid but the requested construction does not apply to them."""
