"""Exception hierarchy shared by every qgl2 module."""


class QGL2Error(Exception):
    """Base class for all errors raised by qgl2."""


class DomainError(QGL2Error, ValueError):
    """An argument lies outside the domain of an operation."""


class RegionError(DomainError):
    """A weight falls outside the region (X1 or pi) an operation requires."""


class NotSymmetricError(QGL2Error, ValueError):
    """A character is not invariant under swapping the two exponents."""


class NotRepresentableError(QGL2Error, ArithmeticError):
    """Leading-term subtraction met a non-dominant leading monomial."""


class NegativeCoefficientError(QGL2Error, ArithmeticError):
    """A character is not a nonnegative sum of special tilting characters."""
