"""Exception hierarchy for gwasym.

All library errors derive from :class:`GwasymError` so that the CLI can map
them onto a single "computation failed" exit code while letting genuinely
unexpected bugs propagate as ordinary tracebacks.
"""


class GwasymError(Exception):
    """Base class for all errors raised by gwasym."""


class PrecisionError(GwasymError):
    """Requested working precision is too low to be meaningful."""


class DomainError(GwasymError):
    """An input lies outside the mathematical domain of an operation.

    Examples: evaluating a generating function at or beyond its radius of
    convergence, or requesting a power-series coefficient whose defining
    formula degenerates.
    """


class DiscriminantError(DomainError):
    """The discriminant fixing the leading half-integer coefficient is
    non-positive, so the square-root branch used downstream is undefined."""


class BracketFailureError(GwasymError):
    """A bisection bracket could not be established.

    For the singular-point solver this almost always means the count table
    is too short for the tail estimates to be trustworthy.
    """


class CacheFormatError(GwasymError):
    """A cache file is malformed or inconsistent with its header."""
