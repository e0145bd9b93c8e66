"""Exception types shared across the package."""

from __future__ import annotations


class LuminousError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LuminousError, ValueError):
    """An argument is outside the range an operation is defined for."""


class SizeLimitError(LuminousError, ValueError):
    """A requested computation exceeds the configured size cap."""
