"""Self-contained SVG rendering of an OFN's two side curves.

Output is a single 640x480 document with inline styles only: the up and down
sides as polylines over alpha in [0, 1], plus small arrowheads showing the
traversal direction (up side toward alpha = 1, down side back toward 0).
Unbounded side values are clipped by starting the alpha range just above 0.
"""
from __future__ import annotations

import math

from .bases import get_base
from .documents import render_sides
from .ring import TypedOfn, side_eval

WIDTH, HEIGHT = 640, 480
MARGIN = 48
_UP_STYLE = "fill:none;stroke:#2a6fb0;stroke-width:2"
_DOWN_STYLE = "fill:none;stroke:#c23b22;stroke-width:2"
_AXIS_STYLE = "stroke:#888888;stroke-width:1"
_TEXT_STYLE = "font-family:monospace;font-size:12px;fill:#333333"


def _samples(x: TypedOfn, count: int) -> list[tuple[float, float, float]]:
    start = 0.004 if get_base(x.base).unbounded else 0.0
    out = []
    for k in range(count):
        alpha = start + (1.0 - start) * k / (count - 1)
        out.append((alpha,
                    side_eval(x, "up", alpha),
                    side_eval(x, "down", alpha)))
    return out


def _arrow(px: float, py: float, angle: float, style: str) -> str:
    size = 7.0
    left = angle + 2.6
    right = angle - 2.6
    pts = (f"{px:.2f},{py:.2f} "
           f"{px + size * math.cos(left):.2f},{py + size * math.sin(left):.2f} "
           f"{px + size * math.cos(right):.2f},{py + size * math.sin(right):.2f}")
    fill = style.split("stroke:")[1].split(";")[0]
    return f'<polygon points="{pts}" style="fill:{fill}" />'


def render_ofn_svg(x: TypedOfn, count: int = 201) -> str:
    rows = _samples(x, count)
    values = [v for _, u, d in rows for v in (u, d)]
    vlo, vhi = min(values), max(values)
    if vhi - vlo < 1e-9:
        vlo -= 1.0
        vhi += 1.0
    pad = 0.05 * (vhi - vlo)
    vlo -= pad
    vhi += pad

    def to_px(alpha: float, v: float) -> tuple[float, float]:
        px = MARGIN + alpha * (WIDTH - 2 * MARGIN)
        py = HEIGHT - MARGIN - (v - vlo) / (vhi - vlo) * (HEIGHT - 2 * MARGIN)
        return px, py

    def polyline(which: int, style: str) -> str:
        pts = " ".join(f"{px:.2f},{py:.2f}"
                       for px, py in (to_px(r[0], r[which]) for r in rows))
        return f'<polyline points="{pts}" style="{style}" />'

    def arrow_at(which: int, frac: float, forward: bool, style: str) -> str:
        k = int(frac * (len(rows) - 1))
        k = min(max(k, 1), len(rows) - 2)
        x1, y1 = to_px(rows[k - 1][0], rows[k - 1][which])
        x2, y2 = to_px(rows[k + 1][0], rows[k + 1][which])
        if not forward:
            x1, y1, x2, y2 = x2, y2, x1, y1
        px, py = to_px(rows[k][0], rows[k][which])
        return _arrow(px, py, math.atan2(y2 - y1, x2 - x1), style)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" style="fill:#ffffff" />',
        f'<line x1="{MARGIN}" y1="{HEIGHT - MARGIN}" x2="{WIDTH - MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" style="{_AXIS_STYLE}" />',
        f'<line x1="{MARGIN}" y1="{MARGIN}" x2="{MARGIN}" '
        f'y2="{HEIGHT - MARGIN}" style="{_AXIS_STYLE}" />',
        f'<text x="{WIDTH - MARGIN}" y="{HEIGHT - MARGIN + 16}" '
        f'style="{_TEXT_STYLE}" text-anchor="end">alpha</text>',
        f'<text x="{MARGIN}" y="{MARGIN - 8}" style="{_TEXT_STYLE}">value</text>',
        f'<text x="{MARGIN}" y="{HEIGHT - 12}" style="{_TEXT_STYLE}">'
        f'{render_sides(x)} [{x.base}]</text>',
        polyline(1, _UP_STYLE),
        polyline(2, _DOWN_STYLE),
        arrow_at(1, 0.35, True, _UP_STYLE),
        arrow_at(1, 0.70, True, _UP_STYLE),
        arrow_at(2, 0.35, False, _DOWN_STYLE),
        arrow_at(2, 0.70, False, _DOWN_STYLE),
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
