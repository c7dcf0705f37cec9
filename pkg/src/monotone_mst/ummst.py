"""Rotational sweep for the cheapest rooted monotone MST over all axes.

Between consecutive critical axes the scan orders of both half-planes (and
hence the tree) do not change.  The sweep starts from a from-scratch tree at
the first critical axis and then visits every critical axis and every
bisector between two of them, updating the state locally:

* a pair of points tied at a critical axis sits next to itself in its half;
  at the tie the nearer-to-prefix point goes first, and just past it the
  order is forced by ``|y'|`` again;
* a point ``q`` with ``rq`` perpendicular to the axis lies on the root line;
  it joins the other half at the critical axis and leaves its old half at
  the next bisector.

Each non-root point keeps, per half, a min-heap of ``(d^2, index)`` keys of
its predecessors.  Entries are removed lazily: a key is live while its point
still precedes the owner in the same half, which is an O(1) position check.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterator

from .geometry import Axis, CriticalSequence, RootedPointSet, RootedTree, critical_sequence
from .ymmst import half_sequences, ymmst

__all__ = ["UmmstSweep", "SweepResult", "ummst"]


@dataclass
class SweepResult:
    """Winning direction, the tree recomputed there, and sweep statistics.

    Unpacks as ``(direction, tree)``.
    """

    direction: object
    tree: RootedTree
    index: int
    stats: dict = field(default_factory=dict)

    def __iter__(self):
        yield self.direction
        yield self.tree

    @property
    def cost(self) -> float:
        return self.tree.cost


class _Edges:
    """Multiset of tree edges with a running total length."""

    def __init__(self, points: RootedPointSet):
        self.points = points
        self.count: dict[tuple[int, int], int] = {}
        self.cost = 0.0

    def add(self, u: int, v: int):
        e = (u, v) if u < v else (v, u)
        c = self.count.get(e, 0)
        if c == 0:
            self.cost += self.points.dist(u, v)
        self.count[e] = c + 1

    def remove(self, u: int, v: int):
        e = (u, v) if u < v else (v, u)
        c = self.count[e] - 1
        if c == 0:
            del self.count[e]
            self.cost -= self.points.dist(u, v)
        else:
            self.count[e] = c

    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.count)

    def exact_cost(self) -> float:
        import math

        return math.fsum(self.points.dist(u, v) for u, v in self.count)


class UmmstSweep:
    """Incremental state of the rotational sweep.

    ``run()`` performs the whole sweep; ``states()`` yields after the state
    for every axis index has been established, for inspection.
    """

    def __init__(self, points: RootedPointSet, seq: CriticalSequence | None = None):
        if len(points) < 2:
            raise ValueError("the sweep needs at least two points")
        self.points = points
        self.n = len(points)
        self.seq = critical_sequence(points) if seq is None else seq
        self.index = -1
        self.stats = {"swap_checks": 0, "swaps": 0, "forced_swaps": 0, "root_enter": 0, "root_leave": 0}

    # ------------------------------------------------------------ state

    def _init_state(self):
        P, n = self.points, self.n
        self.direction = self.seq.direction(0)
        halves = half_sequences(P, Axis(*self.direction), allow_on_axis=True)
        self.order = [h.order for h in halves]
        self.pos = [{p: k for k, p in enumerate(o)} for o in self.order]
        self.heap: list[dict[int, list[int]]] = [{}, {}]
        self.parkey: list[dict[int, int]] = [{}, {}]
        self.edges = _Edges(P)
        for h in (0, 1):
            order = self.order[h]
            for k in range(1, len(order)):
                p = order[k]
                hp = [P.d2(p, q) * n + q for q in order[:k]]
                heapq.heapify(hp)
                self.heap[h][p] = hp
                self.parkey[h][p] = hp[0]
                self.edges.add(p, hp[0] % n)
        self.index = 0

    def _live(self, h: int, p: int, key: int) -> bool:
        q = key % self.n
        pos = self.pos[h]
        return q in pos and pos[q] < pos[p]

    def _clean(self, h: int, p: int, skip: int = -1) -> int:
        hp = self.heap[h][p]
        n = self.n
        while not self._live(h, p, hp[0]) or hp[0] % n == skip:
            heapq.heappop(hp)
        return hp[0]

    def _set_parent_key(self, h: int, p: int, key: int):
        old = self.parkey[h][p]
        if key != old:
            n = self.n
            self.edges.remove(p, old % n)
            self.edges.add(p, key % n)
            self.parkey[h][p] = key

    def _refresh(self, h: int, p: int):
        self._set_parent_key(h, p, self._clean(h, p))

    def _swap(self, h: int, a: int, b: int):
        """Swap adjacent ``a`` (earlier) and ``b`` in half ``h``."""
        order, pos = self.order[h], self.pos[h]
        j = pos[a]
        order[j], order[j + 1] = b, a
        pos[a], pos[b] = j + 1, j
        if self.parkey[h][b] % self.n == a:
            self._refresh(h, b)
        key = self.points.d2(a, b) * self.n + b
        heapq.heappush(self.heap[h][a], key)
        if key < self.parkey[h][a]:
            self._set_parent_key(h, a, key)

    # ------------------------------------------------------------ events

    def _half_of_pair(self, a: int, b: int) -> int:
        for h in (0, 1):
            pos = self.pos[h]
            if a in pos and b in pos:
                return h
        raise AssertionError(f"pair {(a, b)} is not inside one half")

    def _adjacent(self, h: int, a: int, b: int) -> tuple[int, int]:
        pos = self.pos[h]
        if pos[a] > pos[b]:
            a, b = b, a
        if pos[b] != pos[a] + 1:
            raise AssertionError(f"tied pair {(a, b)} is not adjacent in its half")
        return a, b

    def apply_swap_event(self, h: int, a: int, b: int) -> bool:
        """Tie of ``a`` and ``b`` at a critical axis: the one nearer to the
        prefix goes first.  Returns whether the order changed."""
        a, b = self._adjacent(h, a, b)
        self.stats["swap_checks"] += 1
        n = self.n
        da = self.parkey[h][a] // n
        # nearest prefix point of b other than a; a stays a predecessor if kept
        hp = self.heap[h][b]
        popped = 0
        while not self._live(h, b, hp[0]) or hp[0] % n == a:
            if hp[0] % n == a and self._live(h, b, hp[0]):
                popped += 1
            heapq.heappop(hp)
        db = hp[0] // n
        if db < da:
            self._swap(h, a, b)
            self.stats["swaps"] += 1
            return True
        for _ in range(min(popped, 1)):
            heapq.heappush(hp, self.points.d2(a, b) * n + a)
        return False

    def apply_forced_order(self, h: int, a: int, b: int, proj) -> bool:
        """Just past a tie the order is ``|y'|`` again."""
        a, b = self._adjacent(h, a, b)
        if abs(proj(a)) > abs(proj(b)):
            self._swap(h, a, b)
            self.stats["forced_swaps"] += 1
            return True
        return False

    def apply_root_event(self, q: int):
        """``q`` reaches the root line: it also joins the other half, right
        after the root."""
        h = 1 if q in self.pos[0] else 0
        if q in self.pos[h]:
            raise AssertionError(f"point {q} is already in both halves")
        self.stats["root_enter"] += 1
        P, n, r = self.points, self.n, self.points.root
        order = self.order[h]
        order.insert(1, q)
        self.pos[h] = {p: k for k, p in enumerate(order)}
        key = P.d2(q, r) * n + r
        self.heap[h][q] = [key]
        self.parkey[h][q] = key
        self.edges.add(q, r)
        for p in order[2:]:
            key = P.d2(p, q) * n + q
            heapq.heappush(self.heap[h][p], key)
            if key < self.parkey[h][p]:
                self._set_parent_key(h, p, key)

    def leave_root_event(self, q: int, proj):
        """``q`` moves off the root line: drop it from the half it left."""
        h = 1 if proj(q) < 0 else 0
        order = self.order[h]
        k = self.pos[h][q]
        if k != 1:
            raise AssertionError(f"point {q} is not next to the root when leaving")
        self.stats["root_leave"] += 1
        n = self.n
        self.edges.remove(q, self.parkey[h][q] % n)
        del self.heap[h][q], self.parkey[h][q]
        order.pop(k)
        self.pos[h] = {p: j for j, p in enumerate(order)}
        for p in order[k:]:
            if self.parkey[h][p] % n == q:
                self._refresh(h, p)

    # ------------------------------------------------------------ driver

    def _proj_fn(self, direction):
        dx, dy = direction
        xs, ys = self.points.xs, self.points.ys
        return lambda i: xs[i] * dx + ys[i] * dy

    def _step(self, index: int, direction, pairs):
        r = self.points.root
        self.direction = direction
        proj = self._proj_fn(direction)
        if index % 2 == 0:
            located = []
            for a, b in pairs:
                if a == r or b == r:
                    self.apply_root_event(b if a == r else a)
            for a, b in pairs:
                if a != r and b != r:
                    h = self._half_of_pair(a, b)
                    located.append((self.pos[h][a], h, a, b))
            located.sort()
            for _, h, a, b in located:
                self.apply_swap_event(h, a, b)
        else:
            for a, b in pairs:
                if a == r or b == r:
                    self.leave_root_event(b if a == r else a, proj)
            for a, b in pairs:
                if a != r and b != r:
                    self.apply_forced_order(self._half_of_pair(a, b), a, b, proj)
        self.index = index

    def _step_single(self, index: int, direction, a: int, b: int):
        """``_step`` for the common case of one tied pair of non-root points."""
        self.direction = direction
        pos0 = self.pos[0]
        h = 0 if a in pos0 and b in pos0 else 1
        if index % 2 == 0:
            self.apply_swap_event(h, a, b)
        else:
            xs, ys = self.points.xs, self.points.ys
            dx, dy = direction
            pa = xs[a] * dx + ys[a] * dy
            pb = xs[b] * dx + ys[b] * dy
            pos = self.pos[h]
            if pos[a] > pos[b]:
                a, b, pa, pb = b, a, pb, pa
            if pos[b] != pos[a] + 1:
                raise AssertionError(f"tied pair {(a, b)} is not adjacent in its half")
            if abs(pa) > abs(pb):
                self._swap(h, a, b)
                self.stats["forced_swaps"] += 1
        self.index = index

    def states(self) -> Iterator[int]:
        """Advance through every axis index, yielding it once its state holds."""
        seq = self.seq
        r = self.points.root
        offs = seq.offsets.tolist()
        first, second = seq.first.tolist(), seq.second.tolist()
        even = list(zip(seq.even[:, 0].tolist(), seq.even[:, 1].tolist()))
        odd = list(zip(seq.odd[:, 0].tolist(), seq.odd[:, 1].tolist()))
        self._init_state()
        yield 0
        for k in range(seq.m):
            lo, hi = offs[k], offs[k + 1]
            if hi - lo == 1 and first[lo] != r and second[lo] != r:
                a, b = first[lo], second[lo]
                if k > 0:
                    self._step_single(2 * k, even[k], a, b)
                    yield 2 * k
                self._step_single(2 * k + 1, odd[k], a, b)
                yield 2 * k + 1
                continue
            pairs = list(zip(first[lo:hi], second[lo:hi]))
            if k > 0:
                self._step(2 * k, even[k], pairs)
                yield 2 * k
            self._step(2 * k + 1, odd[k], pairs)
            yield 2 * k + 1

    @property
    def cost(self) -> float:
        return self.edges.cost

    def current_edges(self) -> frozenset[tuple[int, int]]:
        return self.edges.edges()

    def current_axis(self) -> Axis:
        return Axis(*self.direction)

    def run(self) -> SweepResult:
        best_i, best = 0, None
        for i in self.states():
            c = self.edges.cost
            if best is None or c < best - 1e-12 * max(1.0, best):
                best_i, best = i, c
        axis = self.seq.axis(best_i)
        tree = ymmst(self.points, axis, allow_on_axis=best_i % 2 == 0)
        stats = dict(self.stats, axes=len(self.seq), sweep_cost=best)
        return SweepResult(axis, tree, best_i, stats)


def ummst(points: RootedPointSet) -> SweepResult:
    """Cheapest rooted y'-monotone MST over all axes y'.

    Returns a :class:`SweepResult`; ``axis, tree = ummst(P)`` also works.
    """
    return UmmstSweep(points).run()
