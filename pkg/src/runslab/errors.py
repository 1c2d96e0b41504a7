"""Exception types shared across the package."""


class RunslabError(Exception):
    """Base class for all runslab errors."""


class InputError(RunslabError):
    """Raised when user-supplied text cannot be parsed."""


class DomainError(RunslabError):
    """Raised when an argument violates an operation's precondition."""


class ConfigError(RunslabError):
    """Raised for invalid configuration such as inconsistent threshold tables."""


class BudgetError(RunslabError):
    """Raised when a request exceeds the configured enumeration budget."""
