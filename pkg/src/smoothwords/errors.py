"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class SmoothWordError(Exception):
    """Base class. CLI exit code 1 unless a subclass overrides it."""

    exit_code = 1


class DomainError(SmoothWordError, ValueError):
    """An argument violates an operation's precondition."""


class NotDifferentiable(DomainError):
    """One derivative step failed: the word contains a forbidden run."""


class NotSmooth(DomainError):
    """Some iterated derivative of the word does not exist."""


class EmptyClass(DomainError):
    """A min/max was requested over an empty set of words."""


class InsufficientData(DomainError):
    pass


class ResourceLimitError(SmoothWordError):
    """Requested size is above the configured ceiling."""

    exit_code = 2


class InvariantError(SmoothWordError, AssertionError):
    """A structural invariant or oracle cross-check failed. Always a bug."""

    exit_code = 3
