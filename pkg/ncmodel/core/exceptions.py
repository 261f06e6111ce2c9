"""
Domain Exceptions

Every error carries a human-readable ``detail`` and the process exit code the
command line maps it to: 1 for bad input, 2 for a broken internal invariant.
"""


class NcModelError(Exception):
    """Base class of all ncmodel errors."""

    exit_code: int = 1

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InputError(NcModelError):
    """The caller supplied data outside an operation's domain."""

    exit_code = 1


class QuiverError(InputError):
    """Malformed marked quiver."""


class DimensionVectorError(InputError):
    """Dimension vector of the wrong length, zero, or not simple."""


class BoundExceededError(InputError):
    """A desk-scale enumeration bound was exceeded."""


class DivisorConfigError(InputError):
    """Ramification data violating the local Artin-Mumford laws."""


class FactorizationError(InputError):
    """Inconsistent n = a.b or n = a.b.c factorization hint."""


class UnsupportedSettingError(InputError):
    """The local setting lies outside the family an operation supports."""


class InvariantViolation(NcModelError):
    """An internal consistency check failed."""

    exit_code = 2
