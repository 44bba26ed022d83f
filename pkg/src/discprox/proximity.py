"""Disc-pair overlap regimes, closed-form proximity values, and the
enumeration oracle that adjudicates them.

In the rotated frame (u = x + y, v = x - y) an L1 disc is the set of
parity-valid points (u = v mod 2) of an axis-aligned square, so the
overlap of two discs is the parity-valid part of a rectangle.  Counting
even and odd values per axis gives the overlap cardinality as
E_u*E_v + O_u*O_v, which collapses to one of two shapes:

  majority  both axis lengths odd, same majority parity class: counts
            (k, n) vs (k-1, n-1), overlap = k*n + (k-1)*(n-1).  This is
            exactly the case where the two boundary circles share a
            pixel.
  tie       both axis lengths even: counts (k, k) and (n, n), overlap
            = 2*k*n.  Boundaries share no pixel.

Pairs fitting neither shape (nested discs, one-axis-nested overlaps)
match no closed form and are classified ``other``.

Regime labels double as closed-form ids:

  disjoint    no shared pixel
  thm1        boundaries share a pixel          m = 2(R1^2+R2^2+R1+R2-2kn+k+n)
  thm2        overlap, boundaries disjoint, tie m = 2(R1^2+R2^2+R1+R2+1-2kn)
  thm3        thm1 with centers on a common
              horizontal or vertical axis       m = (R1-R2)^2+2(R1+R2+1)g-g^2
  corollary   collinear centers, overlapping
              discs, boundaries disjoint        known-bad closed form, kept
                                                for adjudication; reported in
                                                both sign readings of its
                                                inner radius r0
  other       overlap matching no closed form
  collinear   extra flag: centers share an axis

``verify_pair`` computes the oracle value by enumeration and every
applicable closed form; ``counterexample_search`` sweeps a parameter box
and returns the disagreeing reports (empty for thm1/thm2/thm3, never
empty for corollary on any box containing its regime).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import _backend
from .errors import DegenerateOverlapError, EnumerationCapError, RegimeError
from .lattice import DEFAULT_ENUM_CAP, DigitalDisc, PixelPoint, to_uv

FORMULAS = ("thm1", "thm2", "thm3", "corollary")

#: Fixed display order for classification labels.
LABEL_ORDER = ("disjoint", "thm1", "thm2", "thm3", "corollary", "other", "collinear")


@dataclass(frozen=True)
class DiscPair:
    d1: DigitalDisc
    d2: DigitalDisc

    def swapped(self) -> "DiscPair":
        return DiscPair(self.d2, self.d1)


@dataclass(frozen=True)
class OverlapRect:
    """Intersection of the two discs' squares in the (u, v) frame.

    Bounds are inclusive.  A nonempty rectangle can in principle still
    hold zero pixels (no point with u = v mod 2); rect_dims signals that
    as a degenerate overlap.
    """

    u_lo: int
    u_hi: int
    v_lo: int
    v_hi: int

    def parity_counts(self) -> tuple[int, int, int, int]:
        """(even_u, odd_u, even_v, odd_v) value counts within bounds."""
        eu = _count_even(self.u_lo, self.u_hi)
        ev = _count_even(self.v_lo, self.v_hi)
        return eu, (self.u_hi - self.u_lo + 1) - eu, ev, (self.v_hi - self.v_lo + 1) - ev

    def pixel_count(self) -> int:
        """Number of pixels inside: E_u*E_v + O_u*O_v (u and v share parity)."""
        eu, ou, ev, ov = self.parity_counts()
        return eu * ev + ou * ov


@dataclass(frozen=True)
class RectDims:
    """Per-axis pixel counts (k, n) of the attaining parity class.

    structure is "majority" (counts k, n with k-1, n-1 opposite; overlap
    = kn + (k-1)(n-1)), "tie" (both classes equal; overlap = 2kn), or
    "mixed" (neither identity; no closed form applies).
    majority_parity is the attaining residue class, None on a tie.
    """

    k: int
    n: int
    majority_parity: Optional[int]
    structure: str


@dataclass(frozen=True)
class VerificationReport:
    """Oracle-vs-closed-form comparison for one disc pair.

    closed holds every evaluated formula value (corollary twice: as
    printed and with the sign-corrected inner radius); agreement maps the
    same keys to equality with oracle_m.
    """

    pair: DiscPair
    labels: tuple[str, ...]
    oracle_m: int
    closed: dict = field(default_factory=dict)
    agreement: dict = field(default_factory=dict)

    @property
    def regime(self) -> str:
        return "+".join(self.labels)

    @property
    def disagreements(self) -> tuple[str, ...]:
        return tuple(f for f, ok in self.agreement.items() if not ok)

    @property
    def disagrees(self) -> bool:
        return any(not ok for ok in self.agreement.values())


@dataclass(frozen=True)
class SweepResult:
    reports: tuple[VerificationReport, ...]
    pairs_checked: int
    pairs_total: int
    checked_by_formula: dict = field(default_factory=dict)

    @property
    def disagreement_rows(self) -> int:
        return sum(len(r.disagreements) for r in self.reports)

    def disagreements_for(self, formula: str) -> tuple[VerificationReport, ...]:
        return tuple(r for r in self.reports if formula in r.disagreements)


def _count_even(lo: int, hi: int) -> int:
    if lo > hi:
        return 0
    return hi // 2 - (lo - 1) // 2


def overlap_rectangle(pair: DiscPair) -> Optional[OverlapRect]:
    """Intersection of the discs' (u, v) squares, or None when empty."""
    au, av = to_uv(pair.d1.center)
    bu, bv = to_uv(pair.d2.center)
    r1, r2 = pair.d1.R, pair.d2.R
    u_lo, u_hi = max(au - r1, bu - r2), min(au + r1, bu + r2)
    v_lo, v_hi = max(av - r1, bv - r2), min(av + r1, bv + r2)
    if u_lo > u_hi or v_lo > v_hi:
        return None
    return OverlapRect(u_lo, u_hi, v_lo, v_hi)


def rect_dims(rect: OverlapRect) -> RectDims:
    """Classify the rectangle's parity structure and extract (k, n)."""
    eu, ou, ev, ov = rect.parity_counts()
    if eu * ev + ou * ov == 0:
        raise DegenerateOverlapError(
            f"rectangle [{rect.u_lo},{rect.u_hi}]x[{rect.v_lo},{rect.v_hi}] "
            "contains no pixel of the u = v (mod 2) sublattice"
        )
    if eu == ou and ev == ov:
        return RectDims(eu, ev, None, "tie")
    if eu == ou + 1 and ev == ov + 1:
        return RectDims(eu, ev, 0, "majority")
    if ou == eu + 1 and ov == ev + 1:
        return RectDims(ou, ov, 1, "majority")
    return RectDims(max(eu, ou), max(ev, ov), None, "mixed")


def boundaries_intersect(pair: DiscPair) -> bool:
    """True iff the two boundary circles share a pixel (enumerated check)."""
    (ax, ay), (bx, by) = pair.d1.center, pair.d2.center
    return _backend.boundaries_share_pixel(ax, ay, pair.d1.R, bx, by, pair.d2.R)


def discs_intersect(pair: DiscPair) -> bool:
    """True iff the discs share a pixel."""
    rect = overlap_rectangle(pair)
    return rect is not None and rect.pixel_count() > 0


def centers_collinear(pair: DiscPair) -> bool:
    """Centers lie on a common horizontal or vertical axis."""
    (ax, ay), (bx, by) = pair.d1.center, pair.d2.center
    return ax == bx or ay == by


def classify_pair(pair: DiscPair) -> tuple[str, ...]:
    """All applicable regime labels, in LABEL_ORDER.

    Coincident centers are always ``other``: no closed form covers
    nested concentric discs.  thm2 additionally requires the tie parity
    structure; overlapping boundary-disjoint pairs without it (nested or
    one-axis-nested overlaps) have no valid closed form and are
    ``other``.
    """
    labels = set()
    if centers_collinear(pair):
        labels.add("collinear")
    (ax, ay), (bx, by) = pair.d1.center, pair.d2.center
    r1, r2 = pair.d1.R, pair.d2.R
    if (ax, ay) == (bx, by):
        labels.add("other")
        return _ordered(labels)
    rect = overlap_rectangle(pair)
    if rect is None or rect.pixel_count() == 0:
        labels.add("disjoint")
        return _ordered(labels)
    if boundaries_intersect(pair):
        labels.add("thm1")
        if "collinear" in labels:
            labels.add("thm3")
    else:
        struct = rect_dims(rect).structure
        one_step_in = r1 >= 1 and _backend.boundaries_share_pixel(ax, ay, r1 - 1, bx, by, r2)
        if struct == "tie" and one_step_in:
            labels.add("thm2")
        if "collinear" in labels:
            labels.add("corollary")
    if not labels & {"thm1", "thm2", "thm3", "corollary"}:
        labels.add("other")
    return _ordered(labels)


def _ordered(labels: set) -> tuple[str, ...]:
    return tuple(l for l in LABEL_ORDER if l in labels)


def intersection_cardinality_oracle(pair: DiscPair, enum_cap: int | None = DEFAULT_ENUM_CAP) -> int:
    """Ground truth card(D1 and D2) by enumerating pixels of the smaller disc."""
    _cap_pair(pair, enum_cap)
    (ax, ay), (bx, by) = pair.d1.center, pair.d2.center
    return _backend.intersection_card(ax, ay, pair.d1.R, bx, by, pair.d2.R)


def _cap_pair(pair: DiscPair, enum_cap: int | None) -> None:
    if enum_cap is not None and max(pair.d1.R, pair.d2.R) > enum_cap:
        raise EnumerationCapError(
            f"pair radii ({pair.d1.R}, {pair.d2.R}) exceed enumeration cap {enum_cap}"
        )


def m_closed_thm1(pair: DiscPair, dims: Optional[RectDims] = None) -> int:
    """Closed form for pairs whose boundaries share a pixel."""
    if "thm1" not in classify_pair(pair):
        raise RegimeError(f"pair is not in the thm1 regime: {classify_pair(pair)}")
    if dims is None:
        dims = rect_dims(overlap_rectangle(pair))
    r1, r2, k, n = pair.d1.R, pair.d2.R, dims.k, dims.n
    return 2 * (r1 * r1 + r2 * r2 + r1 + r2 - 2 * k * n + k + n)


def m_closed_thm2(pair: DiscPair, dims: Optional[RectDims] = None) -> int:
    """Closed form for overlapping pairs with disjoint boundaries (tie)."""
    if "thm2" not in classify_pair(pair):
        raise RegimeError(f"pair is not in the thm2 regime: {classify_pair(pair)}")
    if dims is None:
        dims = rect_dims(overlap_rectangle(pair))
    r1, r2, k, n = pair.d1.R, pair.d2.R, dims.k, dims.n
    return 2 * (r1 * r1 + r2 * r2 + r1 + r2 + 1 - 2 * k * n)


def _collinear_frame(pair: DiscPair) -> tuple[int, int, int, int, int, bool]:
    """(gap, left_coord, shared_coord, R_left, R_right, horizontal).

    Normalizes a collinear pair so the left disc comes first on the
    shared axis; vertical pairs are handled by swapping coordinate
    roles.
    """
    (ax, ay), (bx, by) = pair.d1.center, pair.d2.center
    r1, r2 = pair.d1.R, pair.d2.R
    if (ax, ay) == (bx, by):
        raise RegimeError("coincident centers: no axis gap")
    if ay == by:
        if ax < bx:
            return bx - ax, ax, ay, r1, r2, True
        return ax - bx, bx, ay, r2, r1, True
    if ax == bx:
        if ay < by:
            return by - ay, ay, ax, r1, r2, False
        return ay - by, by, ax, r2, r1, False
    raise RegimeError("centers do not share a horizontal or vertical axis")


def m_closed_thm3(pair: DiscPair) -> int:
    """Closed form for collinear pairs whose boundaries share a pixel.

    The overlap is itself a digital disc of radius (R1 + R2 - g) / 2,
    which requires R1 + R2 - g even; odd parity means the boundaries
    cannot share a pixel and the pair belongs to the thm2 path.
    """
    g, _left, _shared, rl, rr, _horiz = _collinear_frame(pair)
    if g > rl + rr:
        raise RegimeError(f"discs at gap {g} > R1 + R2 = {rl + rr} are disjoint")
    if (rl + rr - g) % 2:
        raise RegimeError(
            f"R1 + R2 - g = {rl + rr - g} is odd: boundaries share no pixel; "
            "use the thm2 path"
        )
    if g < abs(rl - rr):
        raise RegimeError(f"gap {g} < |R1 - R2| = {abs(rl - rr)}: one boundary is nested")
    return (rl - rr) ** 2 + 2 * (rl + rr + 1) * g - g * g


def thm3_intersection_disc(pair: DiscPair) -> DigitalDisc:
    """The digital disc predicted to equal the overlap in the thm3 regime."""
    g, left, shared, rl, rr, horizontal = _collinear_frame(pair)
    if g > rl + rr or (rl + rr - g) % 2 or g < abs(rl - rr):
        raise RegimeError("pair is not in the thm3 regime")
    c = left + (g + rl - rr) // 2
    r = (rl + rr - g) // 2
    center = PixelPoint(c, shared) if horizontal else PixelPoint(shared, c)
    return DigitalDisc(center, r)


def m_closed_corollary(pair: DiscPair, sign_corrected: bool = False):
    """Known-bad closed form for collinear overlapping pairs with
    disjoint boundaries, evaluated exactly as printed.

    With sign_corrected the inner radius uses -g instead of +g.  Either
    way the value disagrees with the oracle (that is the point: the
    verifier exposes it); non-integer inner radii are kept exact as
    Fractions.
    """
    if "corollary" not in classify_pair(pair):
        raise RegimeError(f"pair is not in the corollary regime: {classify_pair(pair)}")
    g, _left, _shared, rl, rr, _horiz = _collinear_frame(pair)
    r0 = Fraction(rl - 1 + rr + (-g if sign_corrected else g), 2)
    value = 2 * (rl * rl + rr * rr + rl + rr - 2 * r0 * r0 - 4 * r0 + 1)
    return int(value) if value.denominator == 1 else value


def verify_pair(
    pair: DiscPair,
    formulas: tuple[str, ...] = FORMULAS,
    enum_cap: int | None = DEFAULT_ENUM_CAP,
) -> VerificationReport:
    """Compare every applicable selected closed form against the oracle.

    The oracle value is pure enumeration: pixel counts of both discs and
    of their intersection, combined as card(A) + card(B) - 2 card(A&B).
    """
    labels = classify_pair(pair)
    return _verify_classified(pair, labels, formulas, enum_cap)


def _verify_classified(pair, labels, formulas, enum_cap) -> VerificationReport:
    inter = intersection_cardinality_oracle(pair, enum_cap)
    oracle_m = (
        _backend.disc_card_enum(pair.d1.R) + _backend.disc_card_enum(pair.d2.R) - 2 * inter
    )
    closed: dict = {}
    agreement: dict = {}
    dims = None
    if "thm1" in labels or "thm2" in labels:
        dims = rect_dims(overlap_rectangle(pair))
    for formula in FORMULAS:
        if formula not in formulas or formula not in labels:
            continue
        if formula == "thm1":
            closed["thm1"] = m_closed_thm1(pair, dims)
        elif formula == "thm2":
            closed["thm2"] = m_closed_thm2(pair, dims)
        elif formula == "thm3":
            closed["thm3"] = m_closed_thm3(pair)
        else:
            closed["corollary"] = m_closed_corollary(pair)
            closed["corollary_signfix"] = m_closed_corollary(pair, sign_corrected=True)
    for key, value in closed.items():
        agreement[key] = value == oracle_m
    return VerificationReport(pair, labels, oracle_m, closed, agreement)


def run_sweep(
    max_radius: int,
    max_offset: int,
    formulas: tuple[str, ...] = FORMULAS,
    enum_cap: int | None = DEFAULT_ENUM_CAP,
) -> SweepResult:
    """Exhaustive verification sweep.

    The first center is fixed at the origin (everything in sight is
    translation invariant); the second ranges over [0, max_offset]^2 and
    both radii over [0, max_radius].  Pairs where no selected formula
    applies are swept but not checked.  Reports come back in
    lexicographic (R1, R2, gamma, delta) order.
    """
    origin = PixelPoint(0, 0)
    reports = []
    checked = 0
    total = 0
    by_formula = {f: 0 for f in formulas}
    for r1 in range(max_radius + 1):
        for r2 in range(max_radius + 1):
            for gamma in range(max_offset + 1):
                for delta in range(max_offset + 1):
                    total += 1
                    pair = DiscPair(
                        DigitalDisc(origin, r1),
                        DigitalDisc(PixelPoint(gamma, delta), r2),
                    )
                    labels = classify_pair(pair)
                    applicable = [f for f in formulas if f in labels]
                    if not applicable:
                        continue
                    checked += 1
                    for f in applicable:
                        by_formula[f] += 1
                    report = _verify_classified(pair, labels, formulas, enum_cap)
                    if report.disagrees:
                        reports.append(report)
    return SweepResult(tuple(reports), checked, total, by_formula)


def counterexample_search(
    max_radius: int,
    max_offset: int,
    formulas: tuple[str, ...] = FORMULAS,
) -> list[VerificationReport]:
    """Disagreeing reports from the (max_radius, max_offset) sweep."""
    return list(run_sweep(max_radius, max_offset, formulas).reports)
