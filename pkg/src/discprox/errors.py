"""Exception types shared across the package."""


class CoordinateBoundError(ValueError):
    """A coordinate or radius exceeds the exact-arithmetic bound."""


class ParityError(ValueError):
    """A rotated-frame (u, v) point with u + v odd is not a pixel."""


class EnumerationCapError(ValueError):
    """A radius exceeds the enumeration cap (memory guard)."""


class RegimeError(ValueError):
    """A disc pair does not satisfy the preconditions of a closed form."""


class DegenerateOverlapError(ValueError):
    """An overlap rectangle contains no pixel of the parity sublattice."""
