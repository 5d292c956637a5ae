"""
src/utils/errors.py
Exception hierarchy. Every error is also a ValueError so callers that only
know about bad input keep working.
"""
from __future__ import annotations


class BarrlundError(ValueError):
    """Base class for every library error."""


class OutOfDomainError(BarrlundError):
    pass


class InvalidPointError(BarrlundError):
    """Non-finite coordinate."""


class InvalidDomainError(BarrlundError):
    pass


class UnsupportedDomainError(BarrlundError):
    pass


class DegenerateInputError(BarrlundError):
    pass


class BadBracketError(BarrlundError):
    pass


class MissingWindowError(BarrlundError):
    pass


class OutOfRangeError(BarrlundError):
    pass


class ZeroInputError(BarrlundError):
    pass


class BadConfigurationError(BarrlundError):
    pass
