"""Scene files: labeled discs plus an optional render window.

Plain text, one record per line; ``#`` starts a comment.

    # two overlapping discs
    window -4 6 -4 4
    A 0 0 2
    B 2 0 2

The optional ``window`` line gives inclusive x_min x_max y_min y_max
bounds for rendering; disc lines are ``label center_x center_y radius``.
Labels must be unique and may not be the reserved word ``window``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import CoordinateBoundError
from .lattice import DigitalDisc, PixelPoint

_TOKEN = re.compile(r"\S+")


class SceneError(ValueError):
    """Parse or validation failure, with a line/column diagnostic."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        if line is not None:
            where = f"line {line}" + (f", col {col}" if col is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Scene:
    discs: tuple[tuple[str, DigitalDisc], ...]
    window: Optional[tuple[int, int, int, int]] = None

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.discs)

    def get(self, label: str) -> DigitalDisc:
        for name, disc in self.discs:
            if name == label:
                return disc
        raise KeyError(label)


def _int_token(tok: re.Match, line_no: int, what: str) -> int:
    text = tok.group(0)
    try:
        return int(text, 10)
    except ValueError:
        raise SceneError(f"malformed {what} {text!r}", line_no, tok.start() + 1) from None


def parse_scene(text: str) -> Scene:
    discs: list[tuple[str, DigitalDisc]] = []
    seen: set[str] = set()
    window: Optional[tuple[int, int, int, int]] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = list(_TOKEN.finditer(line))
        if not tokens:
            continue
        head = tokens[0].group(0)
        if head == "window":
            if window is not None:
                raise SceneError("duplicate window line", line_no, tokens[0].start() + 1)
            if len(tokens) != 5:
                raise SceneError(
                    f"window needs 4 bounds, got {len(tokens) - 1}", line_no, tokens[0].start() + 1
                )
            x_min, x_max, y_min, y_max = (
                _int_token(tokens[i], line_no, "window bound") for i in range(1, 5)
            )
            if x_min > x_max or y_min > y_max:
                raise SceneError(
                    f"empty window [{x_min},{x_max}]x[{y_min},{y_max}]",
                    line_no,
                    tokens[1].start() + 1,
                )
            window = (x_min, x_max, y_min, y_max)
            continue
        if len(tokens) != 4:
            raise SceneError(
                f"disc record needs 'label x y radius', got {len(tokens)} tokens",
                line_no,
                tokens[0].start() + 1,
            )
        label = head
        if label in seen:
            raise SceneError(f"duplicate label {label!r}", line_no, tokens[0].start() + 1)
        x = _int_token(tokens[1], line_no, "coordinate")
        y = _int_token(tokens[2], line_no, "coordinate")
        radius = _int_token(tokens[3], line_no, "radius")
        if radius < 0:
            raise SceneError(f"negative radius {radius}", line_no, tokens[3].start() + 1)
        try:
            disc = DigitalDisc(PixelPoint(x, y), radius)
        except (CoordinateBoundError, ValueError) as exc:
            raise SceneError(str(exc), line_no, tokens[1].start() + 1) from None
        seen.add(label)
        discs.append((label, disc))
    return Scene(tuple(discs), window)


def load_scene(path) -> Scene:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_scene(fh.read())
