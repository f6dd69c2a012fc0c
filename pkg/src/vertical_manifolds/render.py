"""Static SVG picture of the singular-value model with an arc on top."""

from __future__ import annotations

import math
from html import escape
from typing import Optional

from .geometry import MODEL, Arc, SingularModel

__all__ = ["render_svg"]

SCALE = 60.0


def _xy(x, y):
    return f"{float(x) * SCALE:.2f},{-float(y) * SCALE:.2f}"


def _circle(r, style):
    return f'<circle cx="0" cy="0" r="{r * SCALE:.2f}" {style}/>'


def _cusps(model: SingularModel, circle: str) -> str:
    r = model.radius_of(circle)
    out = []
    for u in model.cusps(circle):
        n = math.hypot(*u)
        out.append(f'<circle cx="{u[0] / n * r * SCALE:.2f}" cy="{-u[1] / n * r * SCALE:.2f}" r="3" fill="black"/>')
    return "".join(out)


def _edge_labels(model: SingularModel) -> str:
    out = []
    cusps = model.c2_cusps
    for i, name in enumerate(model.c2_edges):
        a = math.atan2(cusps[i][1], cusps[i][0])
        b = math.atan2(cusps[(i + 1) % 3][1], cusps[(i + 1) % 3][0])
        if b <= a:
            b += 2 * math.pi
        mid = (a + b) / 2
        x, y = 2.35 * math.cos(mid), 2.35 * math.sin(mid)
        out.append(f'<text x="{x * SCALE:.1f}" y="{-y * SCALE:.1f}" font-size="14">e_{name}</text>')
    return "".join(out)


def render_svg(arc: Optional[Arc] = None, model: SingularModel = MODEL, title: str = "") -> str:
    size = (model.boundary_radius + 0.5) * SCALE
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{-size:.0f} {-size:.0f} {2 * size:.0f} {2 * size:.0f}" '
        f'width="{2 * size:.0f}" height="{2 * size:.0f}">',
        '<rect x="-1000" y="-1000" width="2000" height="2000" fill="white"/>',
        _circle(model.boundary_radius, 'fill="none" stroke="#999" stroke-dasharray="4 4"'),
        _circle(model.d_radius, 'fill="none" stroke="#333" stroke-width="2"'),
        _circle(model.c2_radius, 'fill="none" stroke="#1f5fbf" stroke-width="2"'),
        _circle(model.c1_radius, 'fill="none" stroke="#bf3f1f" stroke-width="2"'),
        _cusps(model, "C1"),
        _cusps(model, "C2"),
        f'<line x1="{model.c1_radius * SCALE}" y1="0" x2="{model.c2_radius * SCALE}" y2="0" '
        'stroke="#888" stroke-dasharray="3 3"/>',
        _edge_labels(model),
    ]
    if arc is not None:
        pts = " ".join(_xy(x, y) for x, y in arc.vertices)
        parts.append(f'<polyline points="{pts}" fill="none" stroke="#2a9d4a" stroke-width="2"/>')
        x0, y0 = arc.vertices[0]
        parts.append(f'<circle cx="{float(x0) * SCALE:.2f}" cy="{-float(y0) * SCALE:.2f}" r="5" fill="#2a9d4a"/>')
    if title:
        parts.append(f'<text x="{-size + 10:.0f}" y="{-size + 24:.0f}" font-size="16">{escape(title)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
