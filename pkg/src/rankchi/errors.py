"""Exception hierarchy shared by the whole package."""


class RankchiError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RankchiError):
    """An argument violates a documented precondition."""


class ParseError(InputError):
    """A text-format file is malformed."""


class ValidationError(InputError):
    """A decomposition fails a structural validity check."""


class StateError(RankchiError):
    """An operation was called on a value in the wrong state (e.g. unrooted)."""


class ResourceError(RankchiError):
    """Instance size exceeds the configured exhaustive-search limit."""


class ContractError(RankchiError):
    """A runtime guarantee (budget, invariant) was violated mid-computation."""
