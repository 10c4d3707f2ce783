"""Exception hierarchy shared by the whole package."""


class FdquotError(Exception):
    """Base class for all errors raised by this package."""


class InputError(FdquotError):
    """Malformed or inconsistent caller-supplied data."""


class UnknownNameError(InputError):
    """A builtin group, simple root or case name that does not exist."""


class NotFiniteTypeError(InputError):
    """Reflection closure exceeded the root-count bound."""


class StructureError(FdquotError):
    """A structural precondition failed (for example a non-maximal Levi subset)."""
