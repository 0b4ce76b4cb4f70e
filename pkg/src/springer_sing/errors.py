"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SpringerError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SpringerError, ValueError):
    """Text could not be turned into a link pattern or tableau."""


class MalformedTextError(ParseError):
    pass


class DuplicateEndpointError(ParseError):
    pass


class EndpointRangeError(ParseError):
    pass


class DegenerateArcError(ParseError):
    """An arc of the form (i,i)."""


class TableauError(ParseError):
    """A tableau violates shape or standardness constraints."""


class PatternError(SpringerError, ValueError):
    """An operation's precondition on a link pattern does not hold."""


class NotMaximalError(PatternError):
    pass


class IncomparableError(SpringerError, ValueError):
    """Two patterns live in different I_{n,k}."""


class ScopeError(SpringerError):
    """The direct algorithm was asked about a pattern it does not cover."""


class SizeLimitError(SpringerError):
    """The orbit-graph oracle refused an input above the size guard."""
