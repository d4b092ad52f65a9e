"""Exception types shared across the package."""


class AlphadetError(Exception):
    """Base class for package-specific errors."""


class CapExceededError(AlphadetError):
    """An enumeration or construction exceeded its size cap."""


class SizeMismatchError(AlphadetError, ValueError):
    """Incompatible sizes, e.g. a partition whose size is not n*l."""


class NotInSubgroupError(AlphadetError, ValueError):
    """A permutation is not a member of the required subgroup."""


class SingularMatrixError(AlphadetError):
    """Exact linear solve hit a singular coefficient matrix."""


class PochhammerZeroError(AlphadetError, ZeroDivisionError):
    """A denominator Pochhammer symbol vanished before the series truncated."""


class EmptyInvariantSpaceError(AlphadetError):
    """The row-group invariant subspace is zero for the requested shape."""


class SpectralRadiusError(AlphadetError, ValueError):
    """The numeric spectral-radius precondition failed."""


class ZeroAlphaError(AlphadetError, ZeroDivisionError):
    """alpha = 0 is outside the domain of the requested check."""
