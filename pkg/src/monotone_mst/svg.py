"""Minimal SVG 1.1 rendering of a rooted tree and its direction.

Output is byte-deterministic: coordinates are printed with a fixed number of
decimals and elements appear in index order.
"""

from __future__ import annotations

from .geometry import Axis, OrthoSystem, RootedTree

__all__ = ["tree_svg"]

_SIZE = 512.0
_PAD = 24.0


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _arrow(x0, y0, ux, uy, length, color) -> str:
    x1, y1 = x0 + ux * length, y0 - uy * length
    # two short barbs at the tip
    bx, by = -ux * 10, uy * 10
    px, py = -uy * 5, -ux * 5
    d = (
        f"M {_fmt(x0)} {_fmt(y0)} L {_fmt(x1)} {_fmt(y1)} "
        f"M {_fmt(x1 + bx + px)} {_fmt(y1 + by + py)} L {_fmt(x1)} {_fmt(y1)} "
        f"L {_fmt(x1 + bx - px)} {_fmt(y1 + by - py)}"
    )
    return f'<path d="{d}" fill="none" stroke="{color}" stroke-width="1.5"/>'


def tree_svg(tree: RootedTree, direction=None) -> str:
    """Render ``tree`` with one circle per point, one line per edge and an
    arrow (or two, for a system) through the root showing the direction."""
    P = tree.points
    fx = [float(p.x) for p in P.points]
    fy = [float(p.y) for p in P.points]
    lo_x, hi_x, lo_y, hi_y = min(fx), max(fx), min(fy), max(fy)
    span = max(hi_x - lo_x, hi_y - lo_y) or 1.0
    k = (_SIZE - 2 * _PAD) / span

    def sx(v):
        return _PAD + (v - lo_x) * k

    def sy(v):
        return _SIZE - _PAD - (v - lo_y) * k

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(_SIZE)}" '
        f'height="{_fmt(_SIZE)}" viewBox="0 0 {_fmt(_SIZE)} {_fmt(_SIZE)}">',
        f'<rect width="{_fmt(_SIZE)}" height="{_fmt(_SIZE)}" fill="white"/>',
    ]
    for u, v in sorted(tree.edges):
        out.append(
            f'<line x1="{_fmt(sx(fx[u]))}" y1="{_fmt(sy(fy[u]))}" '
            f'x2="{_fmt(sx(fx[v]))}" y2="{_fmt(sy(fy[v]))}" stroke="black" stroke-width="1"/>'
        )
    r = P.root
    for i in range(len(P)):
        color = "red" if i == r else "steelblue"
        rad = 4 if i == r else 3
        out.append(f'<circle cx="{_fmt(sx(fx[i]))}" cy="{_fmt(sy(fy[i]))}" r="{rad}" fill="{color}"/>')
    cx, cy = sx(fx[r]), sy(fy[r])
    if isinstance(direction, OrthoSystem):
        for ax, color in ((direction.y_axis, "darkorange"), (direction.x_axis, "seagreen")):
            ux, uy = ax.unit
            out.append(_arrow(cx, cy, ux, uy, 60.0, color))
    elif isinstance(direction, Axis):
        ux, uy = direction.canonical().unit
        out.append(_arrow(cx, cy, ux, uy, 60.0, "darkorange"))
    out.append("</svg>")
    return "\n".join(out) + "\n"
