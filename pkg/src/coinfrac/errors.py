"""Exception hierarchy shared by every coinfrac module."""


class CoinfracError(Exception):
    """Base class for all library errors."""


class DomainError(CoinfracError, ValueError):
    """An argument lies outside the domain of an operation."""


class RangeError(CoinfracError, OverflowError):
    """A quantity does not fit the 63-bit integer budget."""


class ResourceLimitError(CoinfracError, RuntimeError):
    """A computation would exceed its configured work cap."""

    def __init__(self, projected, cap):
        self.projected = projected
        self.cap = cap
        super().__init__(
            f"projected work {projected} exceeds the cap of {cap}; "
            "raise the cap explicitly to proceed"
        )
