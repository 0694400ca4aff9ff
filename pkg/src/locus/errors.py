"""Exception hierarchy shared by every module."""


class LocusError(Exception):
    """Base class for all toolkit errors."""


class InputError(LocusError, ValueError):
    """Malformed input: bad symbols, invariant violations, syntax errors."""


class PreconditionError(InputError):
    """An operation was called outside its documented domain."""


class ResourceLimitError(LocusError):
    """A configured resource cap was exceeded.

    Raised instead of returning a truncated or guessed result.
    """
