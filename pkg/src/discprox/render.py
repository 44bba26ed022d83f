"""Grid renderings of disc scenes: ASCII, PPM pixmap, SVG vector.

Mathematical orientation throughout: y increases upward, so the top
output row is the window's y_max.  Rendering is deterministic; the same
scene and format always produce byte-identical output.

ASCII cells: '.' empty, a digit for a single disc (1 = first disc in the
scene, 2 = second, ...), 'X' for any overlap.  In boundary mode a cell
on exactly one boundary circle is 'o' and on several is 'X'.
"""

from __future__ import annotations

from .lattice import l1_distance
from .scene import Scene

# disc 1 red, disc 2 blue, overlap green; further discs cycle the tail.
PALETTE = ((255, 0, 0), (0, 0, 255), (255, 0, 255), (255, 128, 0), (0, 128, 128))
OVERLAP_RGB = (0, 255, 0)
BACKGROUND_RGB = (255, 255, 255)
SVG_CELL = 20


def default_window(scene: Scene) -> tuple[int, int, int, int] | None:
    """Scene window if given, else the discs' bounding box padded by 1."""
    if scene.window is not None:
        return scene.window
    if not scene.discs:
        return None
    xs_lo = min(d.center.x - d.R for _, d in scene.discs)
    xs_hi = max(d.center.x + d.R for _, d in scene.discs)
    ys_lo = min(d.center.y - d.R for _, d in scene.discs)
    ys_hi = max(d.center.y + d.R for _, d in scene.discs)
    return (xs_lo - 1, xs_hi + 1, ys_lo - 1, ys_hi + 1)


def _memberships(scene: Scene, x: int, y: int, boundaries: bool) -> list[int]:
    hits = []
    for idx, (_, disc) in enumerate(scene.discs):
        d = l1_distance((x, y), disc.center)
        if (d == disc.R) if boundaries else (d <= disc.R):
            hits.append(idx)
    return hits


def render_ascii(scene: Scene, boundaries: bool = False) -> str:
    window = default_window(scene)
    if window is None:
        return "# window empty\n"
    x_min, x_max, y_min, y_max = window
    rows = []
    for y in range(y_max, y_min - 1, -1):
        cells = []
        for x in range(x_min, x_max + 1):
            hits = _memberships(scene, x, y, boundaries)
            if not hits:
                cells.append(".")
            elif len(hits) > 1:
                cells.append("X")
            elif boundaries:
                cells.append("o")
            else:
                cells.append(str(hits[0] + 1) if hits[0] < 9 else "*")
        rows.append("".join(cells))
    rows.append(f"# window x=[{x_min}..{x_max}] y=[{y_min}..{y_max}] (y up)")
    if x_min <= 0 <= x_max and y_min <= 0 <= y_max:
        rows.append(f"# origin (0,0) at column {-x_min}, row {y_max}")
    else:
        rows.append("# origin (0,0) outside window")
    return "\n".join(rows) + "\n"


def _cell_rgb(scene: Scene, x: int, y: int) -> tuple[int, int, int]:
    hits = _memberships(scene, x, y, boundaries=False)
    if not hits:
        return BACKGROUND_RGB
    if len(hits) > 1:
        return OVERLAP_RGB
    return PALETTE[hits[0] % len(PALETTE)]


def render_ppm(scene: Scene) -> str:
    """Portable pixmap (P3), one image pixel per lattice cell."""
    window = default_window(scene)
    if window is None:
        return "P3\n0 0\n255\n"
    x_min, x_max, y_min, y_max = window
    width = x_max - x_min + 1
    height = y_max - y_min + 1
    lines = [f"P3\n{width} {height}\n255"]
    for y in range(y_max, y_min - 1, -1):
        row = []
        for x in range(x_min, x_max + 1):
            row.extend(map(str, _cell_rgb(scene, x, y)))
        lines.append(" ".join(row))
    return "\n".join(lines) + "\n"


def render_svg(scene: Scene) -> str:
    """SVG grid: one square per pixel, black grid lines, origin marked."""
    window = default_window(scene)
    if window is None:
        return '<svg xmlns="http://www.w3.org/2000/svg" width="0" height="0"/>\n'
    x_min, x_max, y_min, y_max = window
    width = (x_max - x_min + 1) * SVG_CELL
    height = (y_max - y_min + 1) * SVG_CELL
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="rgb(255,255,255)"/>',
    ]
    for y in range(y_max, y_min - 1, -1):
        for x in range(x_min, x_max + 1):
            rgb = _cell_rgb(scene, x, y)
            if rgb == BACKGROUND_RGB:
                continue
            sx = (x - x_min) * SVG_CELL
            sy = (y_max - y) * SVG_CELL
            parts.append(
                f'<rect x="{sx}" y="{sy}" width="{SVG_CELL}" height="{SVG_CELL}" '
                f'fill="rgb({rgb[0]},{rgb[1]},{rgb[2]})"/>'
            )
    grid = []
    for col in range(x_max - x_min + 2):
        sx = col * SVG_CELL
        grid.append(f"M{sx} 0V{height}")
    for row in range(y_max - y_min + 2):
        sy = row * SVG_CELL
        grid.append(f"M0 {sy}H{width}")
    parts.append(f'<path d="{" ".join(grid)}" stroke="rgb(0,0,0)" stroke-width="1" fill="none"/>')
    if x_min <= 0 <= x_max and y_min <= 0 <= y_max:
        ox = (0 - x_min) * SVG_CELL + SVG_CELL // 2
        oy = (y_max - 0) * SVG_CELL + SVG_CELL // 2
        parts.append(f'<circle cx="{ox}" cy="{oy}" r="3" fill="rgb(0,0,0)"><title>origin (0,0)</title></circle>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def overlap_cell_count(scene: Scene) -> int:
    """Cells belonging to at least two discs within the render window."""
    window = default_window(scene)
    if window is None:
        return 0
    x_min, x_max, y_min, y_max = window
    count = 0
    for y in range(y_max, y_min - 1, -1):
        for x in range(x_min, x_max + 1):
            if len(_memberships(scene, x, y, boundaries=False)) > 1:
                count += 1
    return count
