# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: pixel enumeration, overlap counting, Hausdorff.

Mirror of ``_kernels_py`` (same signatures, same iteration order).
Coordinates and radii must stay within |value| <= 2**30 so every
intermediate fits a 64-bit signed integer.
"""

from libc.stdlib cimport free, malloc


cdef inline long long llabs64(long long v) noexcept:
    return v if v >= 0 else -v


def circle_points(long long cx, long long cy, long long r):
    """Pixels at L1 distance exactly r from (cx, cy), dx ascending."""
    cdef list pts = []
    cdef long long dx, rem
    for dx in range(-r, r + 1):
        rem = r - llabs64(dx)
        pts.append((cx + dx, cy + rem))
        if rem:
            pts.append((cx + dx, cy - rem))
    return pts


def disc_points(long long cx, long long cy, long long radius):
    """Pixels at L1 distance <= radius from (cx, cy), (dx, dy) ascending."""
    cdef list pts = []
    cdef long long dx, dy, w
    for dx in range(-radius, radius + 1):
        w = radius - llabs64(dx)
        for dy in range(-w, w + 1):
            pts.append((cx + dx, cy + dy))
    return pts


def disc_card_enum(long long radius):
    """Disc pixel count obtained by counting the enumeration, not a formula."""
    cdef long long dx, dy, w, count = 0
    for dx in range(-radius, radius + 1):
        w = radius - llabs64(dx)
        for dy in range(-w, w + 1):
            count += 1
    return count


def intersection_card(long long ax, long long ay, long long r1,
                      long long bx, long long by, long long r2):
    """Pixels common to disc(a, r1) and disc(b, r2).

    Enumerates the smaller disc and tests the defining inequality of the
    other; this is the ground-truth oracle, so no shortcut is taken.
    """
    cdef long long t
    if r1 > r2:
        t = ax; ax = bx; bx = t
        t = ay; ay = by; by = t
        t = r1; r1 = r2; r2 = t
    cdef long long dx, dy, w, px, count = 0
    for dx in range(-r1, r1 + 1):
        w = r1 - llabs64(dx)
        px = ax + dx
        for dy in range(-w, w + 1):
            if llabs64(px - bx) + llabs64(ay + dy - by) <= r2:
                count += 1
    return count


def boundaries_share_pixel(long long ax, long long ay, long long r1,
                           long long bx, long long by, long long r2):
    """True iff some pixel is at distance exactly r1 from a and r2 from b."""
    cdef long long t
    if r1 > r2:
        t = ax; ax = bx; bx = t
        t = ay; ay = by; by = t
        t = r1; r1 = r2; r2 = t
    cdef long long dx, rem, px
    for dx in range(-r1, r1 + 1):
        rem = r1 - llabs64(dx)
        px = ax + dx
        if llabs64(px - bx) + llabs64(ay + rem - by) == r2:
            return True
        if rem and llabs64(px - bx) + llabs64(ay - rem - by) == r2:
            return True
    return False


def hausdorff_points(list pa, list pb):
    """Max-min Hausdorff distance between two nonempty pixel lists."""
    cdef Py_ssize_t na = len(pa), nb = len(pb), i, j
    if na == 0 or nb == 0:
        raise ValueError("hausdorff_points requires nonempty point lists")
    cdef long long *buf = <long long *> malloc(2 * (na + nb) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef long long *xa = buf
    cdef long long *ya = buf + na
    cdef long long *xb = buf + 2 * na
    cdef long long *yb = buf + 2 * na + nb
    cdef long long worst = 0, best, d
    try:
        for i in range(na):
            xa[i] = pa[i][0]
            ya[i] = pa[i][1]
        for j in range(nb):
            xb[j] = pb[j][0]
            yb[j] = pb[j][1]
        for i in range(na):
            best = -1
            for j in range(nb):
                d = llabs64(xa[i] - xb[j]) + llabs64(ya[i] - yb[j])
                if best < 0 or d < best:
                    best = d
            if best > worst:
                worst = best
        for j in range(nb):
            best = -1
            for i in range(na):
                d = llabs64(xa[i] - xb[j]) + llabs64(ya[i] - yb[j])
                if best < 0 or d < best:
                    best = d
            if best > worst:
                worst = best
    finally:
        free(buf)
    return worst
