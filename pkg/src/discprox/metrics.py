"""Proximity measures on finite pixel sets.

Both measures are exact nonnegative integers under the taxicab ground
metric: the symmetric-difference metric m(A, B) = card(A xor B), and the
finite max-min form of the Hausdorff distance.

Note on m for overlapping sets: if A and B intersect but have different
cardinalities then m(A, B) != 0, so m can rank how near two overlapping
discs are where the Hausdorff distance of nested sets cannot (d_H is 0
only for equal sets).
"""

from __future__ import annotations

from . import _backend
from .errors import CoordinateBoundError
from .lattice import COORD_BOUND, PixelSet

ProximityValue = int


def _as_pixelset(s) -> PixelSet:
    return s if isinstance(s, PixelSet) else PixelSet(s)


def symmetric_difference_metric(a, b) -> int:
    """card(A xor B), the symmetric-difference metric.

    Empty sets are fine: m(empty, B) = card(B).  The three equivalent
    forms are all computed and cross-checked (drop under ``python -O``).
    """
    a, b = _as_pixelset(a), _as_pixelset(b)
    m = len(a ^ b)
    assert m == len(a - b) + len(b - a)
    assert m == len(a) + len(b) - 2 * len(a & b)
    return m


def hausdorff_distance(a, b) -> int:
    """max-min Hausdorff distance between nonempty finite pixel sets."""
    a, b = _as_pixelset(a), _as_pixelset(b)
    if not a or not b:
        raise ValueError("hausdorff_distance is undefined for empty sets")
    pa, pb = list(a), list(b)
    # keep the compiled kernel inside exact 64-bit territory
    extreme = max(max(abs(x), abs(y)) for x, y in pa + pb)
    if extreme > COORD_BOUND:
        raise CoordinateBoundError(f"coordinate magnitude {extreme} exceeds {COORD_BOUND}")
    return _backend.hausdorff_points(pa, pb)
