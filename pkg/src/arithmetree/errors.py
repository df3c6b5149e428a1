"""Exception hierarchy.

Everything raised for bad input or an undefined operation derives from
:class:`DomainError`, which the command line maps to exit status 1.
"""

__all__ = [
    "DomainError",
    "ArityError",
    "LiteralSyntaxError",
    "InvalidNameError",
    "DegreeMismatchError",
    "EnumerationLimitError",
    "UndefinedExpressionError",
    "GroveCollisionError",
    "SearchFailure",
    "PreconditionError",
]


class DomainError(ValueError):
    """Base class for all library errors on well-formed calls."""


class ArityError(DomainError):
    """A vertex with fewer than two children was requested."""


class LiteralSyntaxError(DomainError):
    """Malformed tree, name, grove or combination literal."""

    def __init__(self, message, text="", position=None):
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)
        self.text = text
        self.position = position


class InvalidNameError(DomainError):
    """A vector that is not the name of any planar tree."""


class DegreeMismatchError(DomainError):
    """Operands live in different degrees."""


class EnumerationLimitError(DomainError):
    """Requested degree exceeds the configured enumeration cap."""


class UndefinedExpressionError(DomainError):
    """An expression such as (0) < (0) that has no value."""


class GroveCollisionError(DomainError):
    """A dendriform sum produced the same tree twice."""


class SearchFailure(DomainError):
    """No left-modular maximal chain with the required shape was found."""


class PreconditionError(DomainError):
    """Arguments violate a documented precondition."""
