"""Exception types shared across the package."""


class ArimatError(Exception):
    """Base class for all errors raised by this package."""


class NotSquare(ArimatError):
    """A square matrix was required."""


class NotFullRank(ArimatError):
    """The matrix does not have full row rank."""


class NotABasis(ArimatError):
    """The given column set is not a basis (wrong size or dependent)."""


class BadIndex(ArimatError):
    """A ground-set or matrix index is out of range."""


class TooLarge(ArimatError):
    """The instance exceeds the configured cap for an exhaustive computation."""


class NotMultiplicative(ArimatError):
    """The basis is not multiplicative, so no diagonal basic form exists."""


class NotWeaklyMultiplicative(ArimatError):
    """No multiplicative basis exists; the canonical form is undefined."""


class PathMismatch(ArimatError):
    """The forest is not a coordinatizing path for the given matrix."""


class NotSameComponent(ArimatError):
    """The two graph vertices lie in different connected components."""


class NotOnFlat(ArimatError):
    """The point does not satisfy the flat's character equations."""


class DimensionMismatch(ArimatError):
    """The two matrices have incompatible shapes."""


class ParseError(ArimatError):
    """A matrix file could not be parsed."""
