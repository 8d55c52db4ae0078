"""Deterministic SVG drawings of regions and tilings.

One lattice edge is 40 units.  Lattice point (x, y) is drawn at
(40x + 20y, -20*sqrt(3)*y) so that north is up; the irrational ordinate is
computed with Decimal and printed to three places.
"""

from __future__ import annotations

from decimal import Context, Decimal, ROUND_HALF_EVEN
from typing import Iterable, Sequence

from .lattice import LozengeRef, LozOrient, Orient, Region, corners, tri_key

EDGE = 40
_Q = Decimal("0.001")
_H = Context(prec=30).sqrt(Decimal(3)) * (EDGE // 2)  # height of a unit triangle

FILL = {
    LozOrient.VERTICAL: "#f2c14e",
    LozOrient.LEFT: "#5fad56",
    LozOrient.RIGHT: "#4d9de0",
}
TRI_FILL = {Orient.UP: "#ffffff", Orient.DOWN: "#e6e6e6"}


def _pt(p: tuple[int, int]) -> tuple[Decimal, Decimal]:
    x, y = p
    return Decimal(EDGE * x + (EDGE // 2) * y), -_H * y


def _num(d: Decimal) -> str:
    q = d.quantize(_Q, rounding=ROUND_HALF_EVEN)
    s = format(q.normalize(), "f")
    return "0" if s in ("-0", "") else s


def _points(ps: Iterable[tuple[int, int]]) -> str:
    out = []
    for p in ps:
        x, y = _pt(p)
        out.append(f"{_num(x)},{_num(y)}")
    return " ".join(out)


def lozenge_outline(loz: LozengeRef) -> list[tuple[int, int]]:
    """The four corners counterclockwise."""
    up = list(corners(loz.up))
    extra = next(p for p in corners(loz.down) if p not in up)
    shared = set(corners(loz.down))
    out = []
    for i, p in enumerate(up):
        out.append(p)
        q = up[(i + 1) % 3]
        if p in shared and q in shared:
            out.append(extra)
    return out


def _centre(ps: Sequence[tuple[int, int]]) -> tuple[Decimal, Decimal]:
    xs, ys = zip(*(_pt(p) for p in ps))
    return sum(xs) / len(xs), sum(ys) / len(ys)


def render_svg(r: Region, lozenges: Sequence[LozengeRef] | None = None) -> str:
    """The region, or a tiling of it when ``lozenges`` is given."""
    pts = [_pt(p) for t in r.triangles for p in corners(t)]
    pad = Decimal(10)
    if pts:
        xmin = min(x for x, _ in pts) - pad
        ymin = min(y for _, y in pts) - pad
        xmax = max(x for x, _ in pts) + pad
        ymax = max(y for _, y in pts) + pad
    else:
        xmin = ymin = -pad
        xmax = ymax = pad
    w, h = xmax - xmin, ymax - ymin
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(w)}" height="{_num(h)}" '
        f'viewBox="{_num(xmin)} {_num(ymin)} {_num(w)} {_num(h)}">',
        '<g id="triangles" stroke="#999999" stroke-width="1">',
    ]
    for t in r.sorted_triangles():
        out.append(f'<polygon points="{_points(corners(t))}" fill="{TRI_FILL[t.orient]}"/>')
    out.append("</g>")
    marked: list[LozengeRef] = []
    if lozenges is not None:
        out.append('<g id="lozenges" stroke="#000000" stroke-width="2" stroke-linejoin="round">')
        for loz in sorted(lozenges, key=lambda l: tri_key(l.up)):
            out.append(
                f'<polygon points="{_points(lozenge_outline(loz))}" fill="{FILL[loz.orient]}"/>'
            )
            if r.weight(loz) != 1:
                marked.append(loz)
        out.append("</g>")
    else:
        marked = sorted(r.weights, key=lambda l: tri_key(l.up))
    if marked:
        out.append('<g id="weights" fill="none" stroke="#c0392b" stroke-width="2">')
        for loz in sorted(marked, key=lambda l: tri_key(l.up)):
            cx, cy = _centre(lozenge_outline(loz))
            out.append(f'<ellipse cx="{_num(cx)}" cy="{_num(cy)}" rx="8" ry="14"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
