"""Exception types shared across the package."""


class QKneserError(Exception):
    """Base class for all package-specific errors."""


class NotPrimePowerError(QKneserError, ValueError):
    """q has two or more distinct prime factors."""


class UnsupportedFieldError(QKneserError, ValueError):
    """q is a prime power but outside the built-in modulus table."""


class BadQError(QKneserError, ValueError):
    """A counting formula was called with q < 2."""


class AmbientMismatchError(QKneserError, ValueError):
    """Subspaces live over different fields or ambient dimensions."""


class EmptyMatrixError(QKneserError, ValueError):
    """canonicalize() was given a matrix with no rows."""


class OutOfRangeError(QKneserError, ValueError):
    """Parameters fall outside the range where a formula is asserted."""


class DimMismatchError(QKneserError, ValueError):
    """A subspace argument has the wrong dimension for the construction."""


class NotIndependentError(QKneserError, ValueError):
    """The given vertex set induces an edge."""


class MalformedTreeError(QKneserError, ValueError):
    """Tree edges of a decomposition do not form a tree."""


class MalformedFileError(QKneserError, ValueError):
    """A .gr or .td file violates the expected format."""


class ResourceLimitError(QKneserError):
    """Base class for fail-fast size and search-space guards."""


class TooLargeError(ResourceLimitError):
    """Enumeration or construction would exceed the configured size limit."""


class SearchSpaceTooLargeError(ResourceLimitError):
    """Exhaustive separator search refused: guard on |V| and cap exceeded."""
