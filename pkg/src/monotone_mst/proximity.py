"""Insert-only nearest-neighbour structures.

Both structures use the logarithmic method: the ``n`` inserted points are
split into static blocks following the binary representation of ``n``, and
an insertion merges the trailing blocks into one rebuilt block.  Block
contents are contiguous in insertion order, so a block is just a slot range.

* :class:`SemiDynamicNN` keeps a kd-tree per block.
* :class:`SemiDynamicRangeNN` keeps, per block, the points sorted by their
  attribute plus a kd-tree over every aligned power-of-two run of that order;
  an attribute range then decomposes into O(log n) such runs.

Searches run in floating point and return every point whose distance could
tie the minimum; the final choice compares exact squared distances, ties
going to the smallest insertion index.
"""

from __future__ import annotations

import bisect
from fractions import Fraction

import numpy as np

from . import _kd
from .geometry import Point

__all__ = [
    "SemiDynamicNN",
    "SemiDynamicRangeNN",
    "nn_insert",
    "nn_query",
    "rnn_insert",
    "rnn_query",
]

_CANDIDATES = 1024


def _exact_xy(p):
    if isinstance(p, Point):
        return p.x, p.y
    x, y = p
    if isinstance(x, float):
        x = Fraction(x)
    if isinstance(y, float):
        y = Fraction(y)
    return x, y


def _to_float(v) -> float:
    try:
        return float(v)
    except OverflowError:
        return float("inf") if v > 0 else float("-inf")


class _Base:
    def __init__(self, tie_by_item: bool = False):
        self._tie_by_item = tie_by_item
        self._exact: list[tuple] = []
        self._items: list = []
        self._maxabs = 0.0
        self._cand = np.empty(_CANDIDATES, np.int64)
        self._cand_d = np.empty(_CANDIDATES, np.float64)

    def __len__(self) -> int:
        return len(self._exact)

    @property
    def substructure_count(self) -> int:
        return bin(len(self._exact)).count("1")

    def point(self, handle: int):
        """Exact coordinates stored under ``handle`` (the insertion index)."""
        return self._exact[handle]

    def item(self, handle: int):
        return self._items[handle]

    def _slack(self, qx: float, qy: float) -> float:
        m = max(self._maxabs, abs(qx), abs(qy))
        return 1e-12 * m

    def _register(self, p, item):
        x, y = _exact_xy(p)
        fx, fy = _to_float(x), _to_float(y)
        handle = len(self._exact)
        self._exact.append((x, y))
        self._items.append(handle if item is None else item)
        self._maxabs = max(self._maxabs, abs(fx), abs(fy))
        return handle, fx, fy

    def _pick(self, qx, qy, handles):
        # ties go to the smallest handle, or the smallest item if requested
        best = best_d = best_t = None
        items = self._items if self._tie_by_item else None
        for h in handles:
            px, py = self._exact[h]
            dx, dy = px - qx, py - qy
            d = dx * dx + dy * dy
            t = h if items is None else items[h]
            if best is None or d < best_d or (d == best_d and t < best_t):
                best, best_d, best_t = h, d, t
        return best, best_d


class SemiDynamicNN(_Base):
    """Insert-only exact nearest-neighbour search.

    With ``tie_by_item`` equidistant points are ranked by their (comparable)
    items instead of insertion order.

    >>> s = SemiDynamicNN()
    >>> s.insert((0, 0)); s.insert((3, 4))
    0
    1
    >>> s.query((1, 0))
    (0, 0)
    """

    def __init__(self, capacity: int = 16, *, tie_by_item: bool = False):
        super().__init__(tie_by_item)
        self._x = np.empty(capacity, np.float64)
        self._y = np.empty(capacity, np.float64)
        self._ids = np.empty(capacity, np.int64)
        self._dims = np.zeros(capacity, np.int8)

    def _grow(self):
        cap = 2 * len(self._x)
        for name in ("_x", "_y", "_ids", "_dims"):
            old = getattr(self, name)
            new = np.zeros(cap, old.dtype)
            new[: len(old)] = old
            setattr(self, name, new)

    def insert(self, p, item=None) -> int:
        """Store ``p`` and return its handle (insertion index)."""
        handle, fx, fy = self._register(p, item)
        if handle >= len(self._x):
            self._grow()
        self._x[handle] = fx
        self._y[handle] = fy
        self._ids[handle] = handle
        n = handle + 1
        low = n & -n
        if low > 1:
            _kd.build(self._x, self._y, self._ids, self._dims, n - low, n)
        else:
            self._dims[handle] = 0
        return handle

    def nearest(self, q) -> tuple[int, object] | None:
        """``(handle, exact squared distance)`` of the nearest point."""
        n = len(self._exact)
        if n == 0:
            return None
        qx, qy = _exact_xy(q)
        fx, fy = _to_float(qx), _to_float(qy)
        k = _kd.query(
            self._x, self._y, self._ids, self._dims, n, fx, fy,
            self._slack(fx, fy), self._cand, self._cand_d,
        )
        handles = range(n) if k < 0 else self._cand[:k].tolist()
        return self._pick(qx, qy, handles)

    def query(self, q):
        """Nearest stored point as a tuple of exact coordinates, or ``None``."""
        hit = self.nearest(q)
        return None if hit is None else self._exact[hit[0]]


class SemiDynamicRangeNN(_Base):
    """Insert-only nearest-neighbour search restricted to an attribute range."""

    LEAF = 3

    def __init__(self, capacity: int = 16, *, tie_by_item: bool = False):
        super().__init__(tie_by_item)
        self._attrs: list = []
        self._allocate(capacity)

    def _allocate(self, cap: int):
        levels = max(cap.bit_length(), self.LEAF + 1)
        old = getattr(self, "_rx", None)
        rx = np.zeros(cap, np.float64)
        ry = np.zeros(cap, np.float64)
        ra = np.zeros(cap, np.float64)
        lx = np.zeros((levels, cap), np.float64)
        ly = np.zeros((levels, cap), np.float64)
        lid = np.zeros((levels, cap), np.int64)
        ldim = np.zeros((levels, cap), np.int8)
        lattr = np.zeros(cap, np.float64)
        if old is not None:
            k = len(old)
            L = self._lx.shape[0]
            rx[:k], ry[:k], ra[:k] = self._rx, self._ry, self._ra
            lx[:L, :k], ly[:L, :k] = self._lx, self._ly
            lid[:L, :k], ldim[:L, :k] = self._lid, self._ldim
            lattr[:k] = self._lattr
        self._rx, self._ry, self._ra = rx, ry, ra
        self._lx, self._ly, self._lid, self._ldim = lx, ly, lid, ldim
        self._lattr = lattr
        self._starts = np.zeros(levels + 1, np.int64)
        self._sizes = np.zeros(levels + 1, np.int64)
        self._a = np.zeros(levels + 1, np.int64)
        self._b = np.zeros(levels + 1, np.int64)
        self._flags = np.zeros(levels + 1, np.int64)

    def insert(self, p, attr, item=None) -> int:
        handle, fx, fy = self._register(p, item)
        if isinstance(attr, float):
            attr = Fraction(attr)
        self._attrs.append(attr)
        if handle >= len(self._rx):
            self._allocate(2 * len(self._rx))
        self._rx[handle] = fx
        self._ry[handle] = fy
        self._ra[handle] = _to_float(attr)
        n = handle + 1
        low = n & -n
        self._build_block(n - low, low)
        return handle

    def _build_block(self, start: int, size: int):
        ids = np.arange(start, start + size)
        af = self._ra[start : start + size]
        order = ids[np.lexsort((ids, af))]
        fsorted = self._ra[order]
        ties = np.flatnonzero(fsorted[1:] == fsorted[:-1])
        if len(ties):
            order = order.copy()
            k = 0
            tl = ties.tolist()
            while k < len(tl):
                s = tl[k]
                e = s + 1
                while k + 1 < len(tl) and tl[k + 1] == e:
                    k += 1
                    e += 1
                run = order[s : e + 1].tolist()
                run.sort(key=lambda h: (self._attrs[h], h))
                order[s : e + 1] = run
                k += 1
        sl = slice(start, start + size)
        self._lid[0, sl] = order
        self._lx[0, sl] = self._rx[order]
        self._ly[0, sl] = self._ry[order]
        self._lattr[sl] = self._ra[order]
        top = size.bit_length() - 1
        if top >= self.LEAF:
            _kd.build_levels(self._lx, self._ly, self._lid, self._ldim, start, size, top, self.LEAF)

    def _refine(self, blk: int, lo, hi, lo_f: float, hi_f: float):
        # only runs of float-equal attributes at a boundary are ambiguous
        start = int(self._starts[blk])
        a = int(self._a[blk])
        b = int(self._b[blk])
        end = start + int(self._sizes[blk])
        ids, fa = self._lid[0], self._lattr
        while start + a < end and fa[start + a] == lo_f and self._attrs[ids[start + a]] < lo:
            a += 1
        while b > a and fa[start + b - 1] == hi_f and self._attrs[ids[start + b - 1]] > hi:
            b -= 1
        self._a[blk] = a
        self._b[blk] = max(a, b)

    def nearest(self, q, lo, hi) -> tuple[int, object] | None:
        """``(handle, exact squared distance)`` of the nearest point whose
        attribute lies in ``[lo, hi]``; ``None`` if there is none."""
        if lo > hi:
            raise ValueError(f"empty attribute range [{lo}, {hi}]")
        n = len(self._exact)
        if n == 0:
            return None
        qx, qy = _exact_xy(q)
        fx, fy = _to_float(qx), _to_float(qy)
        lo_f, hi_f = _to_float(lo), _to_float(hi)
        nb = _kd.range_bounds(
            self._lattr, n, lo_f, hi_f,
            self._starts, self._sizes, self._a, self._b, self._flags,
        )
        for blk in np.flatnonzero(self._flags[:nb]).tolist():
            self._refine(blk, lo, hi, lo_f, hi_f)
        k = _kd.range_query(
            self._lx, self._ly, self._lid, self._ldim, nb, self._starts,
            self._a, self._b, self.LEAF, fx, fy, self._slack(fx, fy),
            self._cand, self._cand_d,
        )
        if k < 0:
            handles = [h for h in range(n) if lo <= self._attrs[h] <= hi]
        else:
            handles = self._cand[:k].tolist()
        if not handles:
            return None
        return self._pick(qx, qy, handles)

    def query(self, q, lo, hi):
        hit = self.nearest(q, lo, hi)
        return None if hit is None else self._exact[hit[0]]

    def attribute(self, handle: int):
        return self._attrs[handle]


def nn_insert(s: SemiDynamicNN, p) -> SemiDynamicNN:
    s.insert(p)
    return s


def nn_query(s: SemiDynamicNN, q):
    return s.query(q)


def rnn_insert(s: SemiDynamicRangeNN, p, attr) -> SemiDynamicRangeNN:
    s.insert(p, attr)
    return s


def rnn_query(s: SemiDynamicRangeNN, q, lo, hi):
    return s.query(q, lo, hi)
