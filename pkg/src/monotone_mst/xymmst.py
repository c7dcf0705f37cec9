"""Rooted x'y'-monotone minimum spanning trees for a fixed orthogonal system.

The axes of the system cut the plane into four quadrants around the root and
the tree is the union of one tree per quadrant.  Inside a quadrant, points
are scanned by ``(|y'|, |x'|)`` and each point is joined to the nearest
scanned point that it dominates, i.e. one with ``|x'|`` no larger.  The
restricted nearest-neighbour query is answered by a range structure keyed on
``|x'|``.
"""

from __future__ import annotations

from .geometry import DegenerateInputError, OrthoSystem, RootedPointSet, RootedTree
from .proximity import SemiDynamicRangeNN

__all__ = ["quadrants_of", "quadrant_members", "xymmst_quadrant", "xymmst"]


def quadrants_of(x: int, y: int) -> list[int]:
    """Closed quadrants (0..3, counter-clockwise from ``x' >= 0, y' >= 0``)."""
    out = []
    if x >= 0 and y >= 0:
        out.append(0)
    if x <= 0 and y >= 0:
        out.append(1)
    if x <= 0 and y <= 0:
        out.append(2)
    if x >= 0 and y <= 0:
        out.append(3)
    return out


def _coords(points: RootedPointSet, sys: OrthoSystem) -> tuple[list[int], list[int]]:
    a, b = sys.y_axis.dx, sys.y_axis.dy
    xs, ys = points.xs, points.ys
    return [x * b - y * a for x, y in zip(xs, ys)], [x * a + y * b for x, y in zip(xs, ys)]


def quadrant_members(
    points: RootedPointSet, sys: OrthoSystem, *, closed: bool = False
) -> tuple[list[list[int]], list[int], list[int]]:
    """Non-root points per quadrant plus the exact ``x'``/``y'`` coordinates.

    A point on an axis of ``sys`` is an error unless ``closed``, in which case
    it belongs to both adjacent quadrants.
    """
    X, Y = _coords(points, sys)
    groups: list[list[int]] = [[], [], [], []]
    for i in points.others():
        qs = quadrants_of(X[i], Y[i])
        if len(qs) > 1 and not closed:
            raise DegenerateInputError(f"point {i} lies on an axis of the system", (i,))
        for q in qs:
            groups[q].append(i)
    return groups, X, Y


def _quadrant_parents(points: RootedPointSet, members: list[int], X, Y) -> tuple[list[int], dict[int, int]]:
    r = points.root
    xs, ys = points.xs, points.ys
    ax = [abs(v) for v in X]
    members = sorted(members, key=lambda i: (abs(Y[i]), ax[i]))
    rnn = SemiDynamicRangeNN(max(16, len(members) + 1), tie_by_item=True)
    rnn.insert((xs[r], ys[r]), 0, r)
    parent: dict[int, int] = {}
    for p in members:
        h, _ = rnn.nearest((xs[p], ys[p]), 0, ax[p])
        parent[p] = rnn.item(h)
        rnn.insert((xs[p], ys[p]), ax[p], p)
    return [r] + members, parent


def xymmst_quadrant(points: RootedPointSet, sys: OrthoSystem) -> RootedTree:
    """Tree of a point set lying strictly inside one quadrant of ``sys``."""
    groups, X, Y = quadrant_members(points, sys)
    used = [q for q in range(4) if groups[q]]
    if len(used) > 1:
        bad = groups[used[1]][0]
        raise DegenerateInputError(f"point {bad} is in a different quadrant", (bad,))
    members = groups[used[0]] if used else []
    return RootedTree(points, _quadrant_parents(points, members, X, Y)[1])


def xymmst(points: RootedPointSet, sys: OrthoSystem, *, closed: bool = False) -> RootedTree:
    """Rooted x'y'-monotone MST of ``points`` for system ``sys``.

    ``closed`` admits points on the axes (they join both adjacent quadrants,
    always as children of the root); the sweep needs this at critical systems.
    """
    groups, X, Y = quadrant_members(points, sys, closed=closed)
    parent: dict[int, int] = {}
    for members in groups:
        parent.update(_quadrant_parents(points, members, X, Y)[1])
    return RootedTree(points, parent)
