"""Exception hierarchy shared by all homcode modules."""


class HomcodeError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(HomcodeError):
    """A map, cycle, or parameter failed a structural check (CLI exit 2)."""


class BudgetError(HomcodeError):
    """A search would exceed its configured enumeration budget (CLI exit 3)."""
