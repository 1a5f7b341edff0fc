"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so callers can tell bad input
(DomainError), arithmetic leaving the supported range (PeriodOverflowError),
and a violated mathematical claim (ClaimViolationError) apart.
"""


class PisanoError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PisanoError, ValueError):
    """An argument is outside an operation's stated domain."""


class OracleCapError(DomainError):
    """The brute-force oracle was asked for a modulus above its cap."""


class PeriodOverflowError(PisanoError, OverflowError):
    """A period or lcm left the 64-bit range; never silently wrapped."""


class ClaimViolationError(PisanoError):
    """A hard mathematical assertion failed during a scan or search.

    Carries the offending evidence in ``details`` so reports can list it.
    """

    def __init__(self, message: str, details=None):
        super().__init__(message)
        self.details = details if details is not None else []
