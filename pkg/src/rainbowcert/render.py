"""SVG and DOT drawings of edge-colorings.

Polygon layout: with ``n`` odd all vertices sit on a regular n-gon; with
``n`` even vertices ``0..n-2`` form the polygon and ``n-1`` sits in the
centre. Vertex 0 is at the top and ids increase counter-clockwise.

Product layout: blocks of ``block`` consecutive vertices are placed on an
outer polygon (same rule, applied to blocks) and each block is drawn as a
small polygon. When every pair of blocks is joined in a single color, as in
a lexicographic product, that color is drawn once as a thick line between
the block centres.

Output is a pure function of the coloring and the options.
"""
from __future__ import annotations

import colorsys
import math
from math import isqrt

import numpy as np

from .coloring import EdgeColoring
from .errors import DomainError, ResourceError

MAX_RENDER_VERTICES = 4096

_NAMED = [
    "#ff0000", "#bfff00", "#ff8000", "#ffff00", "#bf8040", "#00ff00", "#ffbfbf", "#bfbfbf",
    "#00ffff", "#ff00ff", "#808000", "#800080", "#404040", "#008080", "#0000ff", "#bf0040",
]


def _build_palette():
    out = list(_NAMED)
    k = 0
    while len(out) < 64:
        h = (k * 0.618033988749895) % 1.0
        s = (0.55, 0.85, 0.7)[k % 3]
        v = (0.9, 0.6, 0.75)[(k // 3) % 3]
        r, g, b = colorsys.hsv_to_rgb(h, s, v)
        out.append("#%02x%02x%02x" % (round(r * 255), round(g * 255), round(b * 255)))
        k += 1
    return tuple(out)


PALETTE = _build_palette()
DASHES = (None, "6,3", "2,2", "8,2,2,2")


def stroke(color: int) -> tuple[str, str | None]:
    """Palette entry and dash pattern for a color id; the palette cycles every 64."""
    return PALETTE[color % 64], DASHES[(color // 64) % len(DASHES)]


def polygon_positions(n: int, radius: float = 1.0, cx: float = 0.0, cy: float = 0.0):
    k = n if n % 2 else n - 1
    pos = []
    for i in range(k):
        a = math.pi / 2 + 2 * math.pi * i / k
        pos.append((cx + radius * math.cos(a), cy + radius * math.sin(a)))
    if k < n:
        pos.append((cx, cy))
    return pos


def _block_size(coloring: EdgeColoring, block):
    if block is None:
        block = coloring.meta.get("block_size")
    if block is None:
        r = isqrt(coloring.n)
        if r * r != coloring.n:
            raise DomainError("product layout needs --block unless n is a perfect square")
        block = r
    if block < 2 or coloring.n % block:
        raise DomainError(f"block size {block} does not divide n={coloring.n}")
    return block


def _block_colors(coloring: EdgeColoring, block: int):
    """Color between each pair of blocks, or None if some pair is not monochromatic."""
    m = coloring.n // block
    M = coloring.matrix
    out = {}
    for a in range(m):
        for b in range(a + 1, m):
            sub = M[a * block:(a + 1) * block, b * block:(b + 1) * block]
            c = int(sub[0, 0])
            if not np.all(sub == c):
                return None
            out[a, b] = c
    return out


def layout(coloring: EdgeColoring, kind: str = "polygon", block=None):
    """Return ``(positions, segments)``.

    ``segments`` are ``(x1, y1, x2, y2, color, width)`` tuples in drawing order.
    """
    if coloring.n > MAX_RENDER_VERTICES:
        raise ResourceError(
            f"n={coloring.n} is too large to draw legibly (limit {MAX_RENDER_VERTICES}); "
            "render one block or the base coloring instead")
    if kind == "polygon":
        pos = polygon_positions(coloring.n)
        segs = [(*pos[u], *pos[v], c, 1.0) for u, v, c in coloring.edges()]
        return pos, segs
    if kind != "product":
        raise DomainError(f"unknown layout {kind!r}")
    block = _block_size(coloring, block)
    m = coloring.n // block
    centres = polygon_positions(m, radius=1.0)
    inner_r = 0.45 * math.sin(math.pi / max(m - (m % 2 == 0), 3))
    pos = []
    for cx, cy in centres:
        pos.extend(polygon_positions(block, inner_r, cx, cy))
    segs = []
    between = _block_colors(coloring, block)
    if between is not None:
        for (a, b), c in sorted(between.items()):
            segs.append((*centres[a], *centres[b], c, 4.0))
    M = coloring.matrix
    for u, v, c in coloring.edges():
        same = u // block == v // block
        if same or between is None:
            segs.append((*pos[u], *pos[v], int(M[u, v]), 0.6 if same else 1.0))
    return pos, segs


def _f(x):
    return f"{x:.3f}"


def render_svg(coloring: EdgeColoring, kind: str = "polygon", block=None,
               size: int = 800) -> str:
    pos, segs = layout(coloring, kind, block)
    half = size / 2
    scale = 0.45 * size

    def xy(x, y):
        # y axis flipped so vertex ids run counter-clockwise on screen
        return _f(half + scale * x), _f(half - scale * y)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>K_{coloring.n}, {coloring.ell} colors, {coloring.provenance}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for x1, y1, x2, y2, c, w in segs:
        colour, dash = stroke(c)
        a, b = xy(x1, y1)
        d, e = xy(x2, y2)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(f'<line x1="{a}" y1="{b}" x2="{d}" y2="{e}" stroke="{colour}" '
                   f'stroke-width="{w:g}"{extra} data-color="{c}"/>')
    r = max(1.0, min(5.0, 200.0 / coloring.n))
    for v, (x, y) in enumerate(pos):
        a, b = xy(x, y)
        out.append(f'<circle cx="{a}" cy="{b}" r="{r:g}" fill="black" data-vertex="{v}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_dot(coloring: EdgeColoring, kind: str = "polygon", block=None) -> str:
    """Graphviz source with pinned positions (use ``neato -n``)."""
    pos, _ = layout(coloring, kind, block)
    out = [f"graph K{coloring.n} {{",
           '  node [shape=point, width=0.06];',
           '  edge [penwidth=1.2];']
    for v, (x, y) in enumerate(pos):
        out.append(f'  {v} [pos="{_f(300 * x)},{_f(300 * y)}!"];')
    for u, v, c in coloring.edges():
        colour, dash = stroke(c)
        style = ', style=dashed' if dash else ""
        out.append(f'  {u} -- {v} [color="{colour}", colorid={c}{style}];')
    out.append("}")
    return "\n".join(out) + "\n"
