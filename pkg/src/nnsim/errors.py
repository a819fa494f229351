"""Shared exception types."""


class ConfigError(ValueError):
    """Invalid configuration value; the message names the offending field."""


class NoGovernorsError(RuntimeError):
    """No reward-eligible neurons exist, so the monthly pool cannot be split."""
