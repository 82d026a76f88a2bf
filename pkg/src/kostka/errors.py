"""Exception types shared across the package."""


class KostkaError(Exception):
    """Base class for every error this package raises deliberately."""


class NegativeEntryError(KostkaError, ValueError):
    """An entry that must be nonnegative is negative."""


class InvalidShapeError(KostkaError, ValueError):
    """A sequence that must be a proper partition is not one."""


class WeightMismatchError(KostkaError, ValueError):
    """Shape and content do not sum to the same total."""


class SizeLimitError(KostkaError, ValueError):
    """An input exceeds a configured size cap."""
