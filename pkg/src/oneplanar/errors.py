"""Exception hierarchy shared by every module."""

from __future__ import annotations


class OnePlanarError(Exception):
    """Base class for all errors raised by this package."""


class InputError(OnePlanarError, ValueError):
    """The caller passed something malformed (unknown vertex, bad parameter)."""


class FormatError(InputError):
    """A serialized document could not be parsed."""


class DrawingError(InputError):
    """A rotation system is structurally unreadable."""


class ValidationError(OnePlanarError):
    """A drawing is readable but violates a well-formedness rule."""


class PreconditionError(OnePlanarError):
    """An operation was called on an input outside its domain."""
