"""Standalone SVG rendering of geometric graphs.

No graphics dependency: the output is plain SVG text, so figure tests can
assert on element counts and the files diff cleanly.
"""

from __future__ import annotations

import math

from .geometry import TAU
from .graphs import DirectedGeomGraph


def render_svg(
    g: DirectedGeomGraph,
    cones: bool = False,
    witness: list[int] | None = None,
    size: int = 900,
    margin: float = 50.0,
) -> str:
    """Render points, undirected edges, optional per-vertex cone rays and an
    optional highlighted witness path into a standalone SVG document."""
    pts = g.point_set.points
    if pts:
        xs = [p.x for p in pts]
        ys = [p.y for p in pts]
        lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    else:
        lo_x = hi_x = lo_y = hi_y = 0.0
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-9)
    scale = (size - 2.0 * margin) / span

    def sx(x: float) -> float:
        return margin + (x - lo_x) * scale

    def sy(y: float) -> float:
        # SVG y grows downward; flip to keep the plane orientation
        return size - margin - (y - lo_y) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    if cones and pts:
        ray = 0.08 * span * scale
        width = TAU / g.k
        for p in pts:
            for i in range(g.k):
                ang = g.offset + i * width
                x2 = sx(p.x) + ray * math.cos(ang)
                y2 = sy(p.y) - ray * math.sin(ang)
                out.append(
                    f'<line class="cone" x1="{sx(p.x):.2f}" y1="{sy(p.y):.2f}" '
                    f'x2="{x2:.2f}" y2="{y2:.2f}" stroke="#cccccc" stroke-width="0.6"/>'
                )
    for i, j in sorted(g.undirected_edge_set()):
        p, q = pts[i], pts[j]
        out.append(
            f'<line class="edge" x1="{sx(p.x):.2f}" y1="{sy(p.y):.2f}" '
            f'x2="{sx(q.x):.2f}" y2="{sy(q.y):.2f}" stroke="#444444" stroke-width="1.2"/>'
        )
    if witness:
        coords = " ".join(f"{sx(pts[i].x):.2f},{sy(pts[i].y):.2f}" for i in witness)
        out.append(
            f'<polyline class="witness" points="{coords}" fill="none" '
            f'stroke="#d62728" stroke-width="2.8"/>'
        )
    for i, p in enumerate(pts):
        out.append(
            f'<circle cx="{sx(p.x):.2f}" cy="{sy(p.y):.2f}" r="3.2" fill="#1f77b4"/>'
        )
        label = g.point_set.label(i)
        if label:
            out.append(
                f'<text x="{sx(p.x) + 5:.2f}" y="{sy(p.y) - 5:.2f}" '
                f'font-size="12" font-family="sans-serif">{label}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def save_svg(g: DirectedGeomGraph, path, **kwargs) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(g, **kwargs))
