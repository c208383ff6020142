"""Shared exception types."""


class DomainError(ValueError):
    """Input outside the supported domain (bad grid, wrong representation, ...)."""


class CapacityError(ValueError):
    """Requested order exceeds the configured stability cap."""


class ConfigError(ValueError):
    """Run configuration failed to parse or validate."""
