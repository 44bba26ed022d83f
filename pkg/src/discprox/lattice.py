"""Exact integer geometry of the digital plane under the taxicab metric.

Pixels are points of Z^2.  The circle of radius r around a center is the
set of pixels at L1 distance exactly r (a diamond ring of 4r pixels for
r >= 1); the disc collects everything at distance <= R (2R^2 + 2R + 1
pixels).  All arithmetic is exact: coordinates are Python ints, and
validated constructors keep them within ``COORD_BOUND`` so the compiled
kernels can run in 64-bit integers without overflow.

The 45-degree rotated frame u = x + y, v = x - y turns L1 geometry into
L-infinity geometry: discs become axis-aligned squares.  Pixels map to
exactly the (u, v) lattice points with u = v (mod 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from . import _backend
from .errors import CoordinateBoundError, EnumerationCapError, ParityError

#: Largest magnitude allowed for coordinates and radii.  Keeps every
#: formula in the package (including the quadratic closed forms) exact
#: in 64-bit signed arithmetic.
COORD_BOUND = 2**30

#: Default refusal threshold for pixel enumeration (~33.5M pixels at
#: R = 4096).  Pass a larger cap, or None, to override.
DEFAULT_ENUM_CAP = 4096

#: Ratio of digital-circle circumference (8r) to diameter (2r).
PI_L1 = 4


def check_coord(value: int, what: str = "coordinate") -> int:
    if not isinstance(value, int):
        raise CoordinateBoundError(f"{what} must be an integer, got {value!r}")
    if abs(value) > COORD_BOUND:
        raise CoordinateBoundError(f"{what} {value} exceeds bound {COORD_BOUND}")
    return value


class PixelPoint(NamedTuple):
    """A pixel: an integer lattice point.  Interchangeable with (x, y)."""

    x: int
    y: int


class UVPoint(NamedTuple):
    """A point of the rotated frame; u = v (mod 2) for pixel images."""

    u: int
    v: int


def l1_distance(p, q) -> int:
    """Taxicab distance |px - qx| + |py - qy|; always a nonnegative int."""
    return abs(p[0] - q[0]) + abs(p[1] - q[1])


def to_uv(p) -> UVPoint:
    """Rotate a pixel into the (u, v) frame: u = x + y, v = x - y."""
    return UVPoint(p[0] + p[1], p[0] - p[1])


def from_uv(q) -> PixelPoint:
    """Inverse rotation; only (u, v) with u = v (mod 2) are pixels."""
    u, v = q[0], q[1]
    if (u + v) % 2:
        raise ParityError(f"(u={u}, v={v}) has odd u+v and is not a pixel image")
    return PixelPoint((u + v) // 2, (u - v) // 2)


@dataclass(frozen=True)
class DigitalCircle:
    """All pixels at distance exactly r from the center."""

    center: PixelPoint
    r: int

    def __post_init__(self):
        cx, cy = self.center
        object.__setattr__(self, "center", PixelPoint(check_coord(cx), check_coord(cy)))
        if self.r < 0:
            raise ValueError(f"radius must be >= 0, got {self.r}")
        check_coord(self.r, "radius")


@dataclass(frozen=True)
class DigitalDisc:
    """All pixels at distance <= R from the center."""

    center: PixelPoint
    R: int

    def __post_init__(self):
        cx, cy = self.center
        object.__setattr__(self, "center", PixelPoint(check_coord(cx), check_coord(cy)))
        if self.R < 0:
            raise ValueError(f"radius must be >= 0, got {self.R}")
        check_coord(self.R, "radius")

    def boundary(self) -> DigitalCircle:
        return DigitalCircle(self.center, self.R)


class PixelSet:
    """An immutable finite set of pixels with exact set algebra.

    Iteration is in sorted (x, y) order so downstream output is
    deterministic regardless of hash seeding.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable = ()):
        self._points = frozenset((p[0], p[1]) for p in points)

    @property
    def points(self) -> frozenset:
        return self._points

    @property
    def cardinality(self) -> int:
        return len(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __bool__(self) -> bool:
        return bool(self._points)

    def __contains__(self, p) -> bool:
        return (p[0], p[1]) in self._points

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._points))

    def __eq__(self, other) -> bool:
        if isinstance(other, PixelSet):
            return self._points == other._points
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._points)

    def __or__(self, other: "PixelSet") -> "PixelSet":
        return PixelSet(self._points | other._points)

    def __and__(self, other: "PixelSet") -> "PixelSet":
        return PixelSet(self._points & other._points)

    def __sub__(self, other: "PixelSet") -> "PixelSet":
        return PixelSet(self._points - other._points)

    def __xor__(self, other: "PixelSet") -> "PixelSet":
        return PixelSet(self._points ^ other._points)

    def isdisjoint(self, other: "PixelSet") -> bool:
        return self._points.isdisjoint(other._points)

    def translate(self, dx: int, dy: int) -> "PixelSet":
        return PixelSet((x + dx, y + dy) for x, y in self._points)

    def __repr__(self) -> str:
        return f"PixelSet({sorted(self._points)!r})"


def _check_cap(radius: int, enum_cap: int | None) -> None:
    if enum_cap is not None and radius > enum_cap:
        raise EnumerationCapError(
            f"radius {radius} exceeds enumeration cap {enum_cap}; "
            "raise the cap explicitly to enumerate this many pixels"
        )


def enumerate_circle(c: DigitalCircle, enum_cap: int | None = DEFAULT_ENUM_CAP) -> PixelSet:
    """All pixels at distance exactly c.r from the center; 4r of them (r >= 1)."""
    _check_cap(c.r, enum_cap)
    return PixelSet(_backend.circle_points(c.center.x, c.center.y, c.r))


def enumerate_disc(d: DigitalDisc, enum_cap: int | None = DEFAULT_ENUM_CAP) -> PixelSet:
    """All pixels at distance <= d.R from the center; 2R^2 + 2R + 1 of them."""
    _check_cap(d.R, enum_cap)
    return PixelSet(_backend.disc_points(d.center.x, d.center.y, d.R))


def circle_cardinality_closed(r: int) -> int:
    """Closed-form circle pixel count 4r.

    Only valid for r >= 1: the radius-0 circle is the single center
    pixel, which the formula misses.
    """
    if r < 1:
        raise ValueError(
            f"closed form 4r requires r >= 1 (got r={r}); "
            "the radius-0 circle is the single center pixel, cardinality 1"
        )
    return 4 * r


def circumference_closed(r: int) -> int:
    """Digital circumference 8r; divided by the diameter 2r it gives PI_L1 = 4."""
    if r < 1:
        raise ValueError(f"circumference 8r requires r >= 1 (got r={r})")
    return 8 * r


def disc_cardinality_closed(radius: int) -> int:
    """Closed-form disc pixel count 2R^2 + 2R + 1; valid for all R >= 0."""
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    return 2 * radius * radius + 2 * radius + 1
