"""Exception types shared across the package."""


class LcmBettiError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(LcmBettiError):
    """Two exponent vectors live in different ambient variable counts."""


class DomainError(LcmBettiError):
    """An argument is outside the mathematical domain of the operation."""


class IdealFormatError(LcmBettiError):
    """A monomial string or ideal/clutter document failed to parse."""

    def __init__(self, message, *, position=None):
        super().__init__(message)
        self.position = position


class ResourceCapError(LcmBettiError):
    """A configured size cap was exceeded."""

    def __init__(self, cap_name, cap_value, reached):
        super().__init__(
            f"cap '{cap_name}' exceeded: limit {cap_value}, reached {reached}"
        )
        self.cap_name = cap_name
        self.cap_value = cap_value
        self.reached = reached


class NonTotalOrderError(LcmBettiError):
    """A requested monomial order fails to order the generators totally."""


class TheoremViolationError(LcmBettiError):
    """A verified inequality or implication from the underlying theory failed.

    Raising this is a showstopper: it would mean a mathematical falsification,
    so it carries the full report for inspection.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
