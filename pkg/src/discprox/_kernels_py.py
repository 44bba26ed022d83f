"""Pure-Python kernels: pixel enumeration, overlap counting, Hausdorff.

Fallback for the compiled extension, selected at import time by
``discprox._backend``.  Signatures and iteration order are identical to
the extension; everything is exact integer arithmetic.
"""

from __future__ import annotations


def circle_points(cx: int, cy: int, r: int) -> list[tuple[int, int]]:
    """Pixels at L1 distance exactly r from (cx, cy), dx ascending."""
    pts = []
    for dx in range(-r, r + 1):
        rem = r - abs(dx)
        pts.append((cx + dx, cy + rem))
        if rem:
            pts.append((cx + dx, cy - rem))
    return pts


def disc_points(cx: int, cy: int, radius: int) -> list[tuple[int, int]]:
    """Pixels at L1 distance <= radius from (cx, cy), (dx, dy) ascending."""
    pts = []
    for dx in range(-radius, radius + 1):
        w = radius - abs(dx)
        for dy in range(-w, w + 1):
            pts.append((cx + dx, cy + dy))
    return pts


def disc_card_enum(radius: int) -> int:
    """Disc pixel count obtained by counting the enumeration, not a formula."""
    count = 0
    for dx in range(-radius, radius + 1):
        w = radius - abs(dx)
        for _dy in range(-w, w + 1):
            count += 1
    return count


def intersection_card(ax: int, ay: int, r1: int, bx: int, by: int, r2: int) -> int:
    """Pixels common to disc(a, r1) and disc(b, r2).

    Enumerates the smaller disc and tests the defining inequality of the
    other; this is the ground-truth oracle, so no shortcut is taken.
    """
    if r1 > r2:
        ax, ay, r1, bx, by, r2 = bx, by, r2, ax, ay, r1
    count = 0
    for dx in range(-r1, r1 + 1):
        w = r1 - abs(dx)
        px = ax + dx
        for dy in range(-w, w + 1):
            if abs(px - bx) + abs(ay + dy - by) <= r2:
                count += 1
    return count


def boundaries_share_pixel(ax: int, ay: int, r1: int, bx: int, by: int, r2: int) -> bool:
    """True iff some pixel is at distance exactly r1 from a and r2 from b."""
    if r1 > r2:
        ax, ay, r1, bx, by, r2 = bx, by, r2, ax, ay, r1
    for dx in range(-r1, r1 + 1):
        rem = r1 - abs(dx)
        px = ax + dx
        if abs(px - bx) + abs(ay + rem - by) == r2:
            return True
        if rem and abs(px - bx) + abs(ay - rem - by) == r2:
            return True
    return False


def hausdorff_points(pa: list[tuple[int, int]], pb: list[tuple[int, int]]) -> int:
    """Max-min Hausdorff distance between two nonempty pixel lists."""
    if not pa or not pb:
        raise ValueError("hausdorff_points requires nonempty point lists")

    def directed(src, dst):
        worst = 0
        for x, y in src:
            best = min(abs(x - qx) + abs(y - qy) for qx, qy in dst)
            if best > worst:
                worst = best
        return worst

    return max(directed(pa, pb), directed(pb, pa))
