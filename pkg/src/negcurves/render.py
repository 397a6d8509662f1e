"""SVG and TikZ pictures of a triangle, its lattice points and a Newton polygon.

Output is a pure function of the input: 40 units per lattice step, a 20 unit
margin around the bounding box, y pointing up, and a fixed element order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from . import geometry as geo
from .geometry import Triangle
from .laurent import LaurentPoly, newton_polygon

UNIT = 40
MARGIN = 20
POINT_RADIUS = 3


def _num(v) -> str:
    """Fixed-point text for an exact value: at most 4 decimals, no trailing zeros."""
    f = Fraction(v)
    s = f"{float(round(f, 4)):.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _bbox(points):
    xs = [Fraction(p[0]) for p in points]
    ys = [Fraction(p[1]) for p in points]
    return min(xs), max(xs), min(ys), max(ys)


def svg(t: Triangle, poly: Optional[LaurentPoly] = None, title: Optional[str] = None) -> str:
    """SVG 1.1 document. Support points of ``poly`` are drawn filled, other
    lattice points hollow; its Newton polygon is overlaid dashed.
    """
    pts = geo.lattice_points(t)
    np_vertices: Sequence = newton_polygon(poly).vertices if poly is not None else ()
    x0, x1, y0, y1 = _bbox(list(t.vertices) + list(np_vertices))
    width = (x1 - x0) * UNIT + 2 * MARGIN
    height = (y1 - y0) * UNIT + 2 * MARGIN

    def sx(x):
        return _num((Fraction(x) - x0) * UNIT + MARGIN)

    def sy(y):
        return _num((y1 - Fraction(y)) * UNIT + MARGIN)

    def path(vs):
        return " ".join(f"{sx(x)},{sy(y)}" for x, y in vs)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(width)}" '
        f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
    ]
    if title:
        out.append(f"  <title>{_escape(title)}</title>")
    out.append(f'  <polygon points="{path(t.vertices)}" fill="#eeeeee" stroke="black" stroke-width="1.5"/>')
    if len(np_vertices) >= 2:
        tag = "polygon" if len(np_vertices) > 2 else "polyline"
        out.append(f'  <{tag} points="{path(np_vertices)}" fill="none" stroke="#1f4e9e" '
                   f'stroke-width="1.5" stroke-dasharray="6,3"/>')
    support = poly.support() if poly is not None else set()
    for x, y in pts:
        fill = "black" if (x, y) in support or poly is None else "white"
        out.append(f'  <circle cx="{sx(x)}" cy="{sy(y)}" r="{POINT_RADIUS}" fill="{fill}" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def tikz(t: Triangle, poly: Optional[LaurentPoly] = None, scale: str = "0.5") -> str:
    """The same picture as a tikzpicture environment."""
    def pt(v):
        return f"({_num(v[0])},{_num(v[1])})"

    lines = [f"\\begin{{tikzpicture}}[scale={scale}]"]
    lines.append("  \\draw[fill=gray!15] " + " -- ".join(pt(v) for v in t.vertices) + " -- cycle;")
    if poly is not None:
        vs = newton_polygon(poly).vertices
        if len(vs) >= 2:
            closing = " -- cycle" if len(vs) > 2 else ""
            lines.append("  \\draw[blue, dashed] " + " -- ".join(pt(v) for v in vs) + closing + ";")
    support = poly.support() if poly is not None else None
    for p in geo.lattice_points(t):
        style = "fill=black" if support is None or p in support else "fill=white"
        lines.append(f"  \\filldraw[{style}, draw=black] {pt(p)} circle (2pt);")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
