"""Rotational sweep for the cheapest rooted x'y'-monotone MST over all
orthogonal systems.

A system is identified by the slope of its y'-axis in ``[0, pi/2)``.  For
two points in a common quadrant, their ``|x'|`` order flips exactly when the
y'-axis becomes parallel to them and their ``|y'|`` order flips when it
becomes perpendicular; a point changes quadrant exactly when the line to the
root becomes parallel or perpendicular.  Those are the critical systems, and
between two of them the tree is fixed.

Each (quadrant, point) keeps a min-heap of ``d^2 * n + index`` keys of the
points it dominates in that quadrant.  Stale keys are dropped lazily: a key
is live while its point is still in the quadrant and still dominated, which
is a direct check at the current system.
"""

from __future__ import annotations

import heapq
from typing import Iterator

from .geometry import CriticalSequence, OrthoSystem, RootedPointSet, critical_sequence
from .ummst import SweepResult, _Edges
from .xymmst import quadrants_of, xymmst

__all__ = ["Ummst2dSweep", "ummst2d"]


class Ummst2dSweep:
    """Incremental state of the orthogonal-system sweep; see :class:`UmmstSweep`."""

    def __init__(self, points: RootedPointSet, seq: CriticalSequence | None = None):
        if len(points) < 2:
            raise ValueError("the sweep needs at least two points")
        self.points = points
        self.n = len(points)
        self.seq = critical_sequence(points, quarter=True) if seq is None else seq
        self.index = -1
        self.stats = {"pair_events": 0, "reparents": 0, "root_enter": 0, "root_leave": 0}

    # ------------------------------------------------------------ geometry

    def _xy(self, i: int) -> tuple[int, int]:
        a, b = self.direction
        x, y = self.points.xs[i], self.points.ys[i]
        return x * b - y * a, x * a + y * b

    def _dominates(self, q: int, p: int) -> bool:
        """Whether ``q`` may be ``p``'s parent (same quadrant assumed)."""
        if q == self.points.root:
            return True
        xq, yq = self._xy(q)
        xp, yp = self._xy(p)
        return abs(xq) <= abs(xp) and abs(yq) <= abs(yp)

    # ------------------------------------------------------------ state

    def _init_state(self):
        P, n, r = self.points, self.n, self.points.root
        self.direction = self.seq.direction(0)
        self.members: list[set[int]] = [set(), set(), set(), set()]
        coords = {i: self._xy(i) for i in P.others()}
        for i, (x, y) in coords.items():
            for q in quadrants_of(x, y):
                self.members[q].add(i)
        self.heap: list[dict[int, list[int]]] = [{}, {}, {}, {}]
        self.parkey: list[dict[int, int]] = [{}, {}, {}, {}]
        self.edges = _Edges(P)
        for Q in range(4):
            mem = sorted(self.members[Q], key=lambda i: abs(coords[i][1]))
            for k, p in enumerate(mem):
                xp, yp = abs(coords[p][0]), abs(coords[p][1])
                keys = [P.d2(p, r) * n + r]
                for q in mem:
                    if abs(coords[q][1]) > yp:
                        break
                    if q != p and abs(coords[q][0]) <= xp:
                        keys.append(P.d2(p, q) * n + q)
                self._install(Q, p, keys)
        self.index = 0

    def _install(self, Q: int, p: int, keys: list[int]):
        heapq.heapify(keys)
        self.heap[Q][p] = keys
        self.parkey[Q][p] = keys[0]
        self.edges.add(p, keys[0] % self.n)

    def _live(self, Q: int, p: int, key: int) -> bool:
        q = key % self.n
        return q == self.points.root or (q in self.members[Q] and self._dominates(q, p))

    def _set_parent_key(self, Q: int, p: int, key: int):
        old = self.parkey[Q][p]
        if key != old:
            n = self.n
            self.edges.remove(p, old % n)
            self.edges.add(p, key % n)
            self.parkey[Q][p] = key
            self.stats["reparents"] += 1

    def _refresh(self, Q: int, p: int):
        hp = self.heap[Q][p]
        while not self._live(Q, p, hp[0]):
            heapq.heappop(hp)
        self._set_parent_key(Q, p, hp[0])

    def _offer(self, Q: int, q: int, p: int):
        """Re-evaluate ``q`` as a parent candidate of ``p`` in quadrant ``Q``."""
        if self._dominates(q, p):
            key = self.points.d2(p, q) * self.n + q
            heapq.heappush(self.heap[Q][p], key)
            if key < self.parkey[Q][p]:
                self._set_parent_key(Q, p, key)
        elif self.parkey[Q][p] % self.n == q:
            self._refresh(Q, p)

    # ------------------------------------------------------------ events

    def apply_pair_event_2d(self, p: int, q: int):
        """Re-evaluate dominance between ``p`` and ``q`` in every shared quadrant."""
        self.stats["pair_events"] += 1
        for Q in range(4):
            mem = self.members[Q]
            if p in mem and q in mem:
                self._offer(Q, q, p)
                self._offer(Q, p, q)

    def apply_root_event_2d(self, q: int, enter: bool):
        """``q`` lies on an axis (``enter``) or has just left it."""
        now = set(quadrants_of(*self._xy(q)))
        if enter:
            self.stats["root_enter"] += 1
            for Q in sorted(now):
                if q in self.members[Q]:
                    continue
                mem = self.members[Q]
                P, n, r = self.points, self.n, self.points.root
                keys = [P.d2(q, r) * n + r]
                keys += [P.d2(q, s) * n + s for s in mem if self._dominates(s, q)]
                mem.add(q)
                self._install(Q, q, keys)
                for p in mem:
                    if p != q and self._dominates(q, p):
                        key = P.d2(p, q) * n + q
                        heapq.heappush(self.heap[Q][p], key)
                        if key < self.parkey[Q][p]:
                            self._set_parent_key(Q, p, key)
        else:
            self.stats["root_leave"] += 1
            for Q in range(4):
                if Q in now or q not in self.members[Q]:
                    continue
                mem = self.members[Q]
                mem.discard(q)
                self.edges.remove(q, self.parkey[Q][q] % self.n)
                del self.heap[Q][q], self.parkey[Q][q]
                for p in mem:
                    if self.parkey[Q][p] % self.n == q:
                        self._refresh(Q, p)

    # ------------------------------------------------------------ driver

    def _step(self, index: int, direction, pairs):
        r = self.points.root
        self.direction = direction
        enter = index % 2 == 0
        for a, b in pairs:
            if a == r or b == r:
                self.apply_root_event_2d(b if a == r else a, enter)
        for a, b in pairs:
            if a != r and b != r:
                self.apply_pair_event_2d(a, b)
        self.index = index

    def states(self) -> Iterator[int]:
        seq = self.seq
        offs = seq.offsets.tolist()
        first, second = seq.first.tolist(), seq.second.tolist()
        even = [tuple(map(int, d)) for d in seq.even.tolist()]
        odd = [tuple(map(int, d)) for d in seq.odd.tolist()]
        self._init_state()
        yield 0
        for k in range(seq.m):
            pairs = list(zip(first[offs[k] : offs[k + 1]], second[offs[k] : offs[k + 1]]))
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

    def current_system(self) -> OrthoSystem:
        return OrthoSystem.from_vector(*self.direction)

    def run(self) -> SweepResult:
        best_i, best = 0, None
        for i in self.states():
            c = self.edges.cost
            if best is None or c < best - 1e-12 * max(1.0, best):
                best_i, best = i, c
        sys = self.seq.system(best_i)
        tree = xymmst(self.points, sys, closed=best_i % 2 == 0)
        stats = dict(self.stats, systems=len(self.seq), sweep_cost=best)
        return SweepResult(sys, tree, best_i, stats)


def ummst2d(points: RootedPointSet) -> SweepResult:
    """Cheapest rooted x'y'-monotone MST over all orthogonal systems."""
    return Ummst2dSweep(points).run()
