"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a function is defined."""


class UsageError(ValueError):
    """Arguments are individually valid but inconsistent with each other."""
