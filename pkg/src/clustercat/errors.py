"""Shared exception types."""


class NotFiniteTypeError(ValueError):
    """The requested Dynkin type is not on the supported simply-laced list."""


class NotExchangeableError(ValueError):
    """An operation that needs an exchangeable pair of roots got something else."""


class CapExceededError(RuntimeError):
    """An enumeration would exceed a configured size cap."""


class ContractViolationError(RuntimeError):
    """An internal invariant failed.  Indicates a bug, not bad user input."""
