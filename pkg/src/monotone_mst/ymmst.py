"""Rooted y'-monotone minimum spanning trees for a fixed axis.

The axis splits the points into the closed half-planes ``y' <= 0`` and
``y' >= 0``.  The tree is the union of one tree per half.  Inside a half the
points are scanned by increasing ``|y'|`` and each point is joined to its
nearest already-scanned point, which is its cheapest monotone route to the
root.  Two points at the same ``|y'|`` are scanned closer-to-the-prefix
first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import Axis, DegenerateInputError, RootedPointSet, RootedTree
from .proximity import SemiDynamicNN

__all__ = [
    "HalfSequence",
    "half_sequences",
    "ymmst_one_side",
    "ymmst",
]


@dataclass
class HalfSequence:
    """Scan order of one half-plane (root first) and the parent of each point."""

    order: list[int]
    parent: dict[int, int]


def _scan(points: RootedPointSet, members: list[int], key: list[int]) -> HalfSequence:
    """Scan ``members`` by ``key`` (absolute projection), ties by the distance rule."""
    r = points.root
    xs, ys = points.xs, points.ys
    members = sorted(members, key=lambda i: (key[i], i))
    nn = SemiDynamicNN(max(16, len(members) + 1), tie_by_item=True)
    nn.insert((xs[r], ys[r]), r)
    order = [r]
    parent: dict[int, int] = {}
    k, m = 0, len(members)
    while k < m:
        p = members[k]
        if k + 1 < m and key[members[k + 1]] == key[p]:
            q = members[k + 1]
            hp, dp = nn.nearest((xs[p], ys[p]))
            hq, dq = nn.nearest((xs[q], ys[q]))
            if dq < dp:
                p, q, hp, dp, hq, dq = q, p, hq, dq, hp, dp
            parent[p] = nn.item(hp)
            nn.insert((xs[p], ys[p]), p)
            # the second point may prefer the first one over its prefix parent
            cand = nn.item(hq)
            dpq = points.d2(p, q)
            parent[q] = p if (dpq < dq or (dpq == dq and p < cand)) else cand
            nn.insert((xs[q], ys[q]), q)
            order += [p, q]
            k += 2
        else:
            h, _ = nn.nearest((xs[p], ys[p]))
            parent[p] = nn.item(h)
            nn.insert((xs[p], ys[p]), p)
            order.append(p)
            k += 1
    return HalfSequence(order, parent)


def _projections(points: RootedPointSet, a: Axis) -> list[int]:
    dx, dy = a.dx, a.dy
    return [x * dx + y * dy for x, y in zip(points.xs, points.ys)]


def half_sequences(
    points: RootedPointSet, a: Axis, *, allow_on_axis: bool = False
) -> tuple[HalfSequence, HalfSequence]:
    """Scan orders and parents of the halves ``y' <= 0`` and ``y' >= 0``.

    A non-root point with ``y' = 0`` is rejected unless ``allow_on_axis``;
    then it belongs to both halves (this happens at critical axes during a
    sweep).
    """
    proj = _projections(points, a)
    r = points.root
    minus, plus = [], []
    for i, v in enumerate(proj):
        if i == r:
            continue
        if v < 0:
            minus.append(i)
        elif v > 0:
            plus.append(i)
        elif allow_on_axis:
            minus.append(i)
            plus.append(i)
        else:
            raise DegenerateInputError(
                f"point {i} lies on the root line of the axis", (i,)
            )
    key = [abs(v) for v in proj]
    return _scan(points, minus, key), _scan(points, plus, key)


def ymmst_one_side(points: RootedPointSet, a: Axis) -> RootedTree:
    """Tree of a point set lying in one open half-plane of ``a`` (plus the root)."""
    proj = _projections(points, a)
    r = points.root
    others = points.others()
    signs = {(proj[i] > 0) - (proj[i] < 0) for i in others}
    if 0 in signs or len(signs) > 1:
        bad = next(
            i for i in others
            if proj[i] == 0 or (proj[i] > 0) != (proj[others[0]] > 0)
        )
        raise DegenerateInputError(
            f"point {bad} is not strictly on the same side as the others", (bad,)
        )
    half = _scan(points, others, [abs(v) for v in proj])
    return RootedTree(points, half.parent)


def ymmst(points: RootedPointSet, a: Axis, *, allow_on_axis: bool = False) -> RootedTree:
    """Rooted y'-monotone MST of ``points`` for axis ``a``."""
    minus, plus = half_sequences(points, a, allow_on_axis=allow_on_axis)
    parent = dict(minus.parent)
    parent.update(plus.parent)
    return RootedTree(points, parent)
