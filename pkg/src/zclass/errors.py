"""Shared exception types."""


class BoundExceededError(Exception):
    """An enumeration would exceed its configured size bound."""

    def __init__(self, message, projected=None, bound=None):
        super().__init__(message)
        self.projected = projected
        self.bound = bound
