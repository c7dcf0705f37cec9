"""Brute-force reference implementations.

Everything here is quadratic or worse and written directly from the
definitions, using only the exact predicates of :mod:`monotone_mst.geometry`.
Tests compare the fast modules against these.
"""

from __future__ import annotations

from .geometry import (
    Axis,
    DegenerateInputError,
    GeometricGraph,
    OrthoSystem,
    RootedPointSet,
    RootedTree,
    critical_axes,
    critical_systems,
)

__all__ = [
    "MAX_BRUTE",
    "MAX_PATH_SEARCH",
    "brute_parent_ymmst",
    "brute_xymmst_quadrant",
    "brute_xymmst",
    "brute_ummst",
    "brute_ummst2d",
    "monotone_path_exists",
    "brute_is_rooted_monotone",
    "brute_uniform_axis",
    "brute_uniform_system",
]

MAX_BRUTE = 64
MAX_PATH_SEARCH = 9


def _nearest(points: RootedPointSet, p: int, candidates) -> int:
    return min(candidates, key=lambda q: (points.d2(p, q), q))


def _half_parents(points: RootedPointSet, members: list[int], proj: list[int]) -> dict[int, int]:
    r = points.root
    seq = [r] + sorted(members, key=lambda i: (abs(proj[i]), i))
    # equal |projection|: the point closer to the preceding prefix goes first
    for k in range(1, len(seq) - 1):
        a, b = seq[k], seq[k + 1]
        if abs(proj[a]) == abs(proj[b]):
            prefix = seq[:k]
            da = min(points.d2(a, q) for q in prefix)
            db = min(points.d2(b, q) for q in prefix)
            if db < da:
                seq[k], seq[k + 1] = b, a
    return {seq[k]: _nearest(points, seq[k], seq[:k]) for k in range(1, len(seq))}


def brute_parent_ymmst(
    points: RootedPointSet, a: Axis, *, allow_on_axis: bool = False
) -> RootedTree:
    """O(n^2) y'-MMST: full sort, then a linear scan for every parent."""
    proj = [points.proj(i, a) for i in range(len(points))]
    minus, plus = [], []
    for i in points.others():
        if proj[i] == 0 and not allow_on_axis:
            raise DegenerateInputError(f"point {i} lies on the root line of the axis", (i,))
        if proj[i] <= 0:
            minus.append(i)
        if proj[i] >= 0:
            plus.append(i)
    parent = _half_parents(points, minus, proj)
    parent.update(_half_parents(points, plus, proj))
    return RootedTree(points, parent)


def _quadrant_of(x: int, y: int) -> set[int]:
    quads = set()
    if x >= 0 and y >= 0:
        quads.add(0)
    if x <= 0 and y >= 0:
        quads.add(1)
    if x <= 0 and y <= 0:
        quads.add(2)
    if x >= 0 and y <= 0:
        quads.add(3)
    return quads


def _quadrant_parents(points, members, coords) -> dict[int, int]:
    r = points.root
    parent = {}
    for p in members:
        xp, yp = coords[p]
        cands = [r] + [
            q for q in members
            if q != p and abs(coords[q][0]) <= abs(xp) and abs(coords[q][1]) <= abs(yp)
        ]
        parent[p] = _nearest(points, p, cands)
    return parent


def brute_xymmst_quadrant(points: RootedPointSet, sys: OrthoSystem, quadrant: int = 0) -> RootedTree:
    """Filtered-parent tree of one open quadrant (0..3 counter-clockwise from +x', +y').

    Every non-root point must lie strictly inside ``quadrant``.
    """
    coords = [sys.coordinates(points, i) for i in range(len(points))]
    members = points.others()
    for i in members:
        if _quadrant_of(*coords[i]) != {quadrant}:
            raise DegenerateInputError(f"point {i} is not strictly inside quadrant {quadrant}", (i,))
    return RootedTree(points, _quadrant_parents(points, members, coords))


def brute_xymmst(points: RootedPointSet, sys: OrthoSystem, *, closed: bool = False) -> RootedTree:
    """O(n^2) x'y'-MMST: per quadrant, parent = nearest dominated point.

    With ``closed`` a point on an axis of ``sys`` belongs to both adjacent
    quadrants; otherwise such a point is an error.
    """
    coords = [sys.coordinates(points, i) for i in range(len(points))]
    groups: list[list[int]] = [[], [], [], []]
    for i in points.others():
        quads = _quadrant_of(*coords[i])
        if len(quads) > 1 and not closed:
            raise DegenerateInputError(f"point {i} lies on an axis of the system", (i,))
        for qd in quads:
            groups[qd].append(i)
    parent: dict[int, int] = {}
    for members in groups:
        parent.update(_quadrant_parents(points, members, coords))
    return RootedTree(points, parent)


def _guard(points: RootedPointSet, limit: int):
    if len(points) > limit:
        raise ValueError(f"brute force is limited to {limit} points, got {len(points)}")


def brute_ummst(points: RootedPointSet) -> tuple[Axis, RootedTree]:
    """Cheapest y'-MMST over every critical axis (earliest axis on ties)."""
    _guard(points, MAX_BRUTE)
    best = None
    for a in critical_axes(points):
        t = brute_parent_ymmst(points, a, allow_on_axis=True)
        if best is None or t.cost < best[1].cost - 1e-12 * max(1.0, best[1].cost):
            best = (a, t)
    return best


def brute_ummst2d(points: RootedPointSet) -> tuple[OrthoSystem, RootedTree]:
    """Cheapest x'y'-MMST over every critical system (earliest on ties)."""
    _guard(points, MAX_BRUTE)
    best = None
    for s in critical_systems(points):
        t = brute_xymmst(points, s, closed=True)
        if best is None or t.cost < best[1].cost - 1e-12 * max(1.0, best[1].cost):
            best = (s, t)
    return best


def _monotone(values) -> bool:
    inc = all(u <= v for u, v in zip(values, values[1:]))
    dec = all(u >= v for u, v in zip(values, values[1:]))
    return inc or dec


def _path_ok(points, path, direction) -> bool:
    if isinstance(direction, OrthoSystem):
        xs, ys = zip(*(direction.coordinates(points, i) for i in path))
        return _monotone(xs) and _monotone(ys)
    return _monotone([points.proj(i, direction) for i in path])


def monotone_path_exists(graph: GeometricGraph, direction, target: int) -> bool:
    """Exhaustive search for a simple monotone path from the root to ``target``.

    ``direction`` is an :class:`Axis` (y'-monotone paths) or an
    :class:`OrthoSystem` (paths monotone in both x' and y').
    """
    points = graph.points
    _guard(points, MAX_PATH_SEARCH)
    adj = graph.adjacency
    r = points.root
    if target == r:
        return True

    def dfs(path, seen):
        u = path[-1]
        for v in adj[u]:
            if v in seen:
                continue
            path.append(v)
            # a prefix of a monotone path is monotone, so prune early
            if _path_ok(points, path, direction):
                if v == target:
                    return True
                seen.add(v)
                if dfs(path, seen):
                    return True
                seen.discard(v)
            path.pop()
        return False

    return dfs([r], {r})


def brute_is_rooted_monotone(graph: GeometricGraph, direction) -> bool:
    return all(
        monotone_path_exists(graph, direction, t) for t in range(len(graph.points))
    )


def brute_uniform_axis(graph: GeometricGraph) -> Axis | None:
    """First critical axis of the whole point set that works, or ``None``.

    Monotonicity of a fixed graph can only change where some pair of points
    has equal projection, so the critical axes of all pairs cover every case.
    """
    for a in critical_axes(graph.points):
        if brute_is_rooted_monotone(graph, a):
            return a
    return None


def brute_uniform_system(graph: GeometricGraph) -> OrthoSystem | None:
    for s in critical_systems(graph.points):
        if brute_is_rooted_monotone(graph, s):
            return s
    return None
