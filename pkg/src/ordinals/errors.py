"""Shared exception types for the notation engine."""


class DomainError(Exception):
    """An operation was applied outside its domain (wrong kind, zero argument, ...)."""


class CapError(DomainError):
    """A construction would exceed the notation ceiling (index above F_W(1)+1)."""


class BudgetError(Exception):
    """A numeric evaluation exhausted its step or bit-length budget."""


class GuardViolation(Exception):
    """The first-value guard fired: a limit-index function's first value equals
    its sequence length.  Canonical terms can never trigger this; hitting it
    means a non-canonical term leaked into sequence expansion."""
