"""Shared exception types."""


class ContractViolationError(ValueError):
    """A caller broke a documented precondition (bad index, arity mismatch, ...)."""


class ExhaustiveLimitError(RuntimeError):
    """A request would exceed the configured exhaustive-search limit."""
