"""SVG rendering of patches.

Every placed cell is drawn as eight triangles, one per half-edge, each
spanning from the half-edge to the cell centre.  Because labels are read
clockwise, the two halves of a matched border show the same colors on both
sides of the shared edge.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .core import E, N, S, W, Patch, TileSet, placement_edge, validate_patch

# fixed colors for common palette names; anything else is hashed to a hue
COLOR_TABLE = {
    "red": "#d62728", "blue": "#1f77b4", "green": "#2ca02c", "yellow": "#f2c12e",
    "orange": "#ff7f0e", "purple": "#9467bd", "cyan": "#17becf", "magenta": "#e377c2",
    "brown": "#8c564b", "gray": "#7f7f7f", "grey": "#7f7f7f", "black": "#222222",
    "white": "#f4f4f4", "pink": "#f7b6d2", "olive": "#bcbd22", "navy": "#1b3a6b",
    "teal": "#2a9d8f", "lime": "#9be15d", "maroon": "#7b1e2b", "gold": "#d4a017",
}


def color_for(name: str) -> str:
    if name.lower() in COLOR_TABLE:
        return COLOR_TABLE[name.lower()]
    digest = hashlib.sha256(name.encode("utf-8")).digest()
    hue = int.from_bytes(digest[:2], "big") % 360
    sat = 45 + digest[2] % 40
    light = 40 + digest[3] % 25
    return f"hsl({hue},{sat}%,{light}%)"


@dataclass(frozen=True)
class RenderOptions:
    cell: int = 40
    labels: bool = False
    show_violations: bool = False
    outline: bool = True
    background: str = "#ffffff"


def _half_edges(x: int, y: int, s: int):
    """(side, first-half polygon, second-half polygon) in clockwise reading order."""
    h = s // 2
    cx, cy = x + h, y + h
    c = (cx, cy)
    return (
        (N, ((x, y), (x + h, y), c), ((x + h, y), (x + s, y), c)),
        (E, ((x + s, y), (x + s, y + h), c), ((x + s, y + h), (x + s, y + s), c)),
        (S, ((x + s, y + s), (x + h, y + s), c), ((x + h, y + s), (x, y + s), c)),
        (W, ((x, y + s), (x, y + h), c), ((x, y + h), (x, y), c)),
    )


def _poly(points, fill: str) -> str:
    pts = " ".join(f"{a},{b}" for a, b in points)
    return f'<polygon points="{pts}" fill="{fill}"/>'


def render_svg(p: Patch, ts: TileSet, options: RenderOptions = RenderOptions()) -> str:
    s = options.cell
    if s < 2 or s % 2:
        raise ValueError("cell size must be an even number of pixels, at least 2")
    width, height = p.width * s, p.height * s
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="{options.background}"/>',
    ]
    fills = [color_for(c) for c in ts.palette]
    for (col, row), cell in p.items():
        if cell is None:
            continue
        x, y = col * s, row * s
        out.append(f'<g class="cell" data-cell="{col},{row}" data-tile="{escape(str(cell))}">')
        for side, first, second in _half_edges(x, y, s):
            lab = placement_edge(ts, cell, side)
            out.append(_poly(first, fills[lab.first]))
            out.append(_poly(second, fills[lab.second]))
        if options.outline:
            out.append(
                f'<rect x="{x}" y="{y}" width="{s}" height="{s}" fill="none" '
                f'stroke="#333333" stroke-width="1"/>'
            )
        if options.labels:
            size = max(s // 3, 6)
            out.append(
                f'<text x="{x + s // 2}" y="{y + s // 2}" font-family="monospace" '
                f'font-size="{size}" text-anchor="middle" dominant-baseline="central" '
                f'fill="#000000">{escape(cell.tile)}</text>'
            )
        out.append("</g>")
    if options.show_violations:
        for v in validate_patch(p, ts):
            (c, r) = v.cell_b
            if v.side == "E":
                x1, y1, x2, y2 = c * s, r * s, c * s, (r + 1) * s
            else:
                x1, y1, x2, y2 = c * s, r * s, (c + 1) * s, r * s
            out.append(
                f'<line class="violation" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                f'stroke="#000000" stroke-width="{max(s // 6, 3)}" stroke-linecap="round"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
