"""Exception taxonomy shared across the package."""


class BinomialError(Exception):
    """Base class for all package errors."""


class ParseError(BinomialError):
    """Malformed input text or JSON."""


class ExponentOverflowError(BinomialError):
    """An exponent left the supported 64-bit range."""


class UnsupportedInputError(BinomialError):
    """Input outside the supported class (e.g. non-unital generators)."""


class DomainError(BinomialError):
    """Operation applied outside its domain (e.g. unit ideal where a proper one is required)."""


class DimensionError(BinomialError):
    """A finite-dimensional quotient was required but the quotient is infinite."""


class MembershipError(BinomialError):
    """A vector is not a member of the lattice it was evaluated against."""


class CharacterError(BinomialError):
    """Inconsistent character data (values do not extend to the spanned lattice)."""


class NotLatticeIdealError(BinomialError):
    """An ideal expected to be a lattice ideal contains a monomial."""


class NotCellularError(BinomialError):
    """A cellular ideal was required."""


class HullPreconditionError(BinomialError):
    """Hull requires a cellular ideal with exactly one minimal prime."""


class ComponentError(BinomialError):
    """A primary component could not be formed over the given prime."""


class InternalError(BinomialError):
    """An internal invariant was violated."""


class NotBinomialResultError(InternalError):
    """A computed ideal has no binomial generating set."""
