"""Recognition of rooted monotone geometric graphs.

For a fixed axis, an edge can be walked away from the root only towards a
larger ``|y'|`` on the same side of the root line, so monotonicity is plain
reachability in the oriented graph.  The same holds for an orthogonal system
with dominance inside a common quadrant.

An equivalent counting test avoids the traversal: a non-root point is fine
when it has a neighbour strictly nearer the root line on its side (the set
``B``), or, failing that, a same-height neighbour that has one (the set
``C``).  The uniform recognisers sweep the direction and keep the
per-point neighbour sets up to date, so each direction is tested in O(1).
"""

from __future__ import annotations

from collections import deque

from .geometry import Axis, GeometricGraph, OrthoSystem, critical_sequence

__all__ = [
    "DisconnectedGraphError",
    "y_digraph",
    "xy_digraph",
    "is_rooted_y_monotone",
    "is_rooted_y_monotone_by_count",
    "is_rooted_xy_monotone",
    "is_rooted_xy_monotone_by_count",
    "uniform_monotone_axis",
    "uniform_2d_monotone_system",
]


class DisconnectedGraphError(ValueError):
    """The graph is not connected, so no point set can reach every vertex."""


def _require_connected(graph: GeometricGraph):
    if not graph.is_connected():
        raise DisconnectedGraphError("graph is not connected")


def _heights(graph: GeometricGraph, a: Axis) -> list[int]:
    P = graph.points
    return [P.proj(i, a) for i in range(len(P))]


def _y_allows(yu: int, yv: int) -> bool:
    """Whether the edge may be walked from height ``yu`` to height ``yv``."""
    return yu * yv >= 0 and abs(yu) <= abs(yv)


def _xy_allows(cu: tuple[int, int], cv: tuple[int, int]) -> bool:
    (xu, yu), (xv, yv) = cu, cv
    return xu * xv >= 0 and yu * yv >= 0 and abs(xu) <= abs(xv) and abs(yu) <= abs(yv)


def y_digraph(graph: GeometricGraph, a: Axis) -> list[list[int]]:
    """Arcs that a y'-monotone walk from the root may use.

    Edges crossing the root line are dropped; equal heights give both arcs.
    """
    y = _heights(graph, a)
    out: list[list[int]] = [[] for _ in y]
    for u, v in sorted(graph.edges):
        if _y_allows(y[u], y[v]):
            out[u].append(v)
        if _y_allows(y[v], y[u]):
            out[v].append(u)
    return out


def xy_digraph(graph: GeometricGraph, sys: OrthoSystem) -> list[list[int]]:
    """Arcs along which dominance grows inside a common closed quadrant."""
    P = graph.points
    c = [sys.coordinates(P, i) for i in range(len(P))]
    out: list[list[int]] = [[] for _ in c]
    for u, v in sorted(graph.edges):
        if _xy_allows(c[u], c[v]):
            out[u].append(v)
        if _xy_allows(c[v], c[u]):
            out[v].append(u)
    return out


def _reaches_all(out: list[list[int]], root: int) -> bool:
    seen = [False] * len(out)
    seen[root] = True
    todo = deque([root])
    count = 1
    while todo:
        u = todo.popleft()
        for v in out[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                todo.append(v)
    return count == len(out)


def is_rooted_y_monotone(graph: GeometricGraph, a: Axis) -> bool:
    """Every vertex is reachable from the root by a y'-monotone path."""
    _require_connected(graph)
    return _reaches_all(y_digraph(graph, a), graph.points.root)


def is_rooted_xy_monotone(graph: GeometricGraph, sys: OrthoSystem) -> bool:
    """Every vertex is reachable from the root by an x'y'-monotone path."""
    _require_connected(graph)
    return _reaches_all(xy_digraph(graph, sys), graph.points.root)


# ---------------------------------------------------------------- counting


def _lower(yp: int, yq: int) -> bool:
    """``q`` is on ``p``'s (closed) side and strictly nearer the root line."""
    return yp * yq >= 0 and abs(yq) < abs(yp)


def _dominated(cp: tuple[int, int], cq: tuple[int, int]) -> bool:
    return _xy_allows(cq, cp)


def _y_count_test(graph: GeometricGraph, y: list[int], B: list[bool], equal_edges) -> bool:
    P = graph.points
    r, n = P.root, len(P)
    on_line = [i for i in range(n) if i != r and y[i] == 0]
    C = set()
    for u, v in equal_edges:
        if u == r or v == r or y[u] != y[v] or y[u] == 0:
            continue
        if not B[u] and B[v]:
            C.add(u)
        if not B[v] and B[u]:
            C.add(v)
    total = sum(B) + len(C)
    if not on_line:
        return total == n - 1
    # a point on the root line needs a direct edge to the root
    edges = graph.edges
    if any((min(q, r), max(q, r)) not in edges for q in on_line):
        return False
    return total == n - 1 - len(on_line)


def is_rooted_y_monotone_by_count(graph: GeometricGraph, a: Axis) -> bool:
    """Counting characterisation: every non-root point is in ``B`` or ``C``."""
    _require_connected(graph)
    P = graph.points
    r = P.root
    y = _heights(graph, a)
    B = [False] * len(P)
    for u, v in graph.edges:
        if u != r and _lower(y[u], y[v]):
            B[u] = True
        if v != r and _lower(y[v], y[u]):
            B[v] = True
    return _y_count_test(graph, y, B, graph.edges)


def is_rooted_xy_monotone_by_count(graph: GeometricGraph, sys: OrthoSystem) -> bool:
    """Counting characterisation: every non-root point has a dominated neighbour."""
    _require_connected(graph)
    P = graph.points
    r = P.root
    c = [sys.coordinates(P, i) for i in range(len(P))]
    B = [False] * len(P)
    for u, v in graph.edges:
        if u != r and _dominated(c[u], c[v]):
            B[u] = True
        if v != r and _dominated(c[v], c[u]):
            B[v] = True
    return sum(B) == len(P) - 1


# ---------------------------------------------------------------- sweeps


class _NeighbourSets:
    """``A(p)``: neighbours admissible as the previous vertex of ``p``."""

    def __init__(self, graph: GeometricGraph, admissible):
        self.graph = graph
        self.root = graph.points.root
        self.admissible = admissible
        self.A: list[set[int]] = [set() for _ in range(len(graph.points))]
        self.size = 0

    def refresh(self, u: int, v: int):
        for p, q in ((u, v), (v, u)):
            if p == self.root:
                continue
            Ap = self.A[p]
            want = self.admissible(p, q)
            if want and q not in Ap:
                if not Ap:
                    self.size += 1
                Ap.add(q)
            elif not want and q in Ap:
                Ap.discard(q)
                if not Ap:
                    self.size -= 1

    def in_b(self, p: int) -> bool:
        return bool(self.A[p])


def _event_pairs(graph: GeometricGraph):
    P = graph.points
    r = P.root
    pairs = set(graph.edges)
    pairs.update((min(r, p), max(r, p)) for p in P.others())
    pairs = sorted(pairs)
    return [p for p, _ in pairs], [q for _, q in pairs]


def _sweep(graph: GeometricGraph, quarter: bool, make_admissible, test):
    """Shared driver: walk the critical directions, refreshing the edges an
    event can affect, and return the first direction index that passes."""
    P = graph.points
    r = P.root
    adj = graph.adjacency
    seq = critical_sequence(P, _event_pairs(graph), quarter=quarter)
    state = {"direction": seq.direction(0)}
    sets = _NeighbourSets(graph, make_admissible(state))
    for u, v in graph.edges:
        sets.refresh(u, v)
    for i in range(len(seq)):
        k = i // 2
        group = seq.pairs(k)
        if i > 0:
            state["direction"] = seq.direction(i)
            for a, b in group:
                if a == r or b == r:
                    q = b if a == r else a
                    for v in adj[q]:
                        sets.refresh(q, v)
                elif (a, b) in graph.edges:
                    sets.refresh(a, b)
        if test(sets, state, group if i % 2 == 0 else ()):
            return seq, i
    return seq, None


def uniform_monotone_axis(graph: GeometricGraph) -> Axis | None:
    """An axis for which the graph is rooted monotone, or ``None``.

    Only critical axes (perpendicular to an edge or to a root-point line)
    and the bisectors between consecutive ones need testing.
    """
    _require_connected(graph)
    P = graph.points
    if len(P) == 1:
        return Axis(0, 1)
    xs, ys = P.xs, P.ys

    def height(state, i):
        dx, dy = state["direction"]
        return xs[i] * dx + ys[i] * dy

    def make_admissible(state):
        return lambda p, q: _lower(height(state, p), height(state, q))

    def test(sets, state, group):
        equal = [(a, b) for a, b in group if (a, b) in graph.edges]
        return _y_count_test_sparse(graph, sets, equal, group)

    seq, i = _sweep(graph, False, make_admissible, test)
    return None if i is None else seq.axis(i)


def _y_count_test_sparse(graph, sets: _NeighbourSets, equal_edges, group) -> bool:
    """The counting test at one axis, using only the event pairs of the axis.

    Equal heights (set ``C``) and points on the root line can only come from
    pairs that are critical at this very axis.
    """
    P = graph.points
    r, n = P.root, len(P)
    B = sets.in_b
    C = set()
    for u, v in equal_edges:
        if u == r or v == r:
            continue
        if not B(u) and B(v):
            C.add(u)
        if not B(v) and B(u):
            C.add(v)
    on_line = [b if a == r else a for a, b in group if r in (a, b)]
    total = sets.size + len(C)
    if not on_line:
        return total == n - 1
    edges = graph.edges
    if any((min(q, r), max(q, r)) not in edges for q in on_line):
        return False
    return total == n - 1 - len(on_line)


def uniform_2d_monotone_system(graph: GeometricGraph) -> OrthoSystem | None:
    """An orthogonal system for which the graph is rooted x'y'-monotone, or ``None``."""
    _require_connected(graph)
    P = graph.points
    if len(P) == 1:
        return OrthoSystem(Axis(0, 1))
    xs, ys = P.xs, P.ys

    def coords(state, i):
        a, b = state["direction"]
        x, y = xs[i], ys[i]
        return x * b - y * a, x * a + y * b

    def make_admissible(state):
        return lambda p, q: _dominated(coords(state, p), coords(state, q))

    def test(sets, state, group):
        return sets.size == len(P) - 1

    seq, i = _sweep(graph, True, make_admissible, test)
    return None if i is None else seq.system(i)
