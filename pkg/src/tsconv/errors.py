"""Exception types shared across the toolkit."""


class TsconvError(Exception):
    """Base class for all toolkit errors."""


class NotInTimeScale(TsconvError):
    """A point was required to belong to the time scale and does not."""

    def __init__(self, scale, value):
        super().__init__(f"{value!r} is not an element of {scale!r}")
        self.scale = scale
        self.value = value


class InvalidWindow(TsconvError):
    """Window endpoints out of order or below the scale minimum."""


class InvalidInterval(TsconvError):
    """Interval endpoints out of order."""


class ZeroDenominator(TsconvError):
    """A density ratio was requested on a window of zero measure."""


class DomainError(TsconvError):
    """Function evaluation outside its mathematical domain."""


class ResolutionFailure(TsconvError):
    """Set resolution exceeded its sampling or enumeration budget.

    Carries enough context for callers to report the failure instead of
    silently dropping structure.
    """

    def __init__(self, message, *, window=None, detail=None):
        super().__init__(message)
        self.window = window
        self.detail = detail


class ComplementNotRepresentable(TsconvError):
    """The complement (or difference) has no finite closed-component form."""


class BoundedRestriction(TsconvError):
    """A classical limit was requested along a bounded set."""


class WitnessFailure(TsconvError):
    """A decomposition witness violated its boundedness or union contract."""


class PreconditionFailure(TsconvError):
    """A documented operation precondition does not hold."""


class ConfigError(TsconvError):
    """Scenario configuration problem, with a pointer to the offending field."""

    def __init__(self, message, *, field=None):
        pointer = f" (at {field})" if field else ""
        super().__init__(message + pointer)
        self.field = field
