"""Points, axes, exact predicates and critical-slope enumeration.

Coordinates are exact rationals.  A :class:`RootedPointSet` translates its
points so the root sits at the origin and clears denominators, so every
order decision downstream (projection comparisons, squared distances, slope
sorting) is integer arithmetic.  Square roots only appear in costs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

__all__ = [
    "Point",
    "RootedPointSet",
    "Axis",
    "OrthoSystem",
    "GeometricGraph",
    "RootedTree",
    "CriticalSequence",
    "DegenerateInputError",
    "to_exact",
    "project",
    "compare_projections",
    "squared_distance",
    "critical_axes",
    "critical_systems",
    "critical_sequence",
    "graph_cost",
    "validate_general_position",
]

Real = Union[int, float, str, Fraction, Decimal]

# numpy fast paths are taken when every scaled coordinate fits in this bound;
# differences then stay below 2**31 and products below 2**63.
_FAST_LIMIT = 1 << 30


class DegenerateInputError(ValueError):
    """Input violates a general-position or boundary precondition."""

    def __init__(self, message: str, indices: tuple[int, ...] = ()):
        super().__init__(message)
        self.indices = tuple(indices)


def to_exact(value: Real) -> Fraction:
    """Convert a number or decimal string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse coordinate {value!r}") from None
    raise TypeError(f"unsupported coordinate type {type(value).__name__}")


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", to_exact(self.x))
        object.__setattr__(self, "y", to_exact(self.y))

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x
        yield self.y

    def __sub__(self, other: Point) -> tuple[Fraction, Fraction]:
        return self.x - other.x, self.y - other.y


def _as_point(p) -> Point:
    return p if isinstance(p, Point) else Point(*p)


def _ints_from_rationals(values: Sequence[Fraction]) -> tuple[list[int], int]:
    scale = 1
    for v in values:
        scale = math.lcm(scale, v.denominator)
    return [v.numerator * (scale // v.denominator) for v in values], scale


class RootedPointSet:
    """Planar points with a designated root.

    ``xs``/``ys`` hold the integer coordinates of ``(p - root) * scale``;
    the original points are kept for reporting.
    """

    def __init__(
        self,
        points: Iterable,
        root: int = 0,
        *,
        check_general_position: bool = True,
        exhaustive_limit: int = 2048,
    ):
        pts = tuple(_as_point(p) for p in points)
        if not pts:
            raise ValueError("empty point set")
        if not 0 <= root < len(pts):
            raise ValueError(f"root index {root} out of range")
        self.points = pts
        self.root = root
        ox, oy = pts[root].x, pts[root].y
        flat, scale = _ints_from_rationals(
            [c for p in pts for c in (p.x - ox, p.y - oy)]
        )
        self.scale = scale
        self.xs = flat[0::2]
        self.ys = flat[1::2]
        seen: dict[tuple[int, int], int] = {}
        for i, key in enumerate(zip(self.xs, self.ys)):
            if key in seen:
                raise DegenerateInputError(
                    f"duplicate points {seen[key]} and {i}", (seen[key], i)
                )
            seen[key] = i
        bound = max(max(map(abs, self.xs)), max(map(abs, self.ys)))
        self._fast = bound < _FAST_LIMIT
        self._arrays = None
        if check_general_position:
            bad = validate_general_position(self, exhaustive_limit=exhaustive_limit)
            if bad is not None:
                raise DegenerateInputError(
                    "collinear points {}, {}, {}".format(*bad), bad
                )

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"RootedPointSet(n={len(self)}, root={self.root})"

    @property
    def fast(self) -> bool:
        return self._fast

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Scaled coordinates as numpy arrays (int64 when safe, else object)."""
        if self._arrays is None:
            dtype = np.int64 if self._fast else object
            self._arrays = (np.array(self.xs, dtype=dtype), np.array(self.ys, dtype=dtype))
        return self._arrays

    def d2(self, i: int, j: int) -> int:
        """Squared distance in scaled integer units."""
        dx = self.xs[i] - self.xs[j]
        dy = self.ys[i] - self.ys[j]
        return dx * dx + dy * dy

    def dist(self, i: int, j: int) -> float:
        return math.sqrt(self.d2(i, j)) / self.scale

    def proj(self, i: int, axis: Axis) -> int:
        """Projection onto ``axis`` in scaled units (order-preserving, exact)."""
        return self.xs[i] * axis.dx + self.ys[i] * axis.dy

    def others(self) -> list[int]:
        return [i for i in range(len(self)) if i != self.root]


def validate_general_position(
    points: RootedPointSet, *, exhaustive_limit: int = 2048, samples: int = 8, seed: int = 0
) -> tuple[int, int, int] | None:
    """Return a collinear triple ``(i, j, k)`` or ``None``.

    For every anchor ``i`` the reduced directions towards later points are
    hashed; a repeated direction is a collinear triple.  That is exact and
    O(n^2) overall.  Above ``exhaustive_limit`` only ``samples`` random anchors
    are checked.
    """
    n = len(points)
    if n < 3:
        return None
    if n <= exhaustive_limit:
        anchors: Iterable[int] = range(n - 2)
    else:
        anchors = sorted(random.Random(seed).sample(range(n), samples))
    xs, ys = points.xs, points.ys
    for i in anchors:
        found = _collinear_from(xs, ys, i, n, points.fast and n > 64)
        if found is not None:
            return found
    return None


def _collinear_from(xs, ys, i, n, vectorized):
    if vectorized:
        X = np.asarray(xs, dtype=np.int64)
        Y = np.asarray(ys, dtype=np.int64)
        js = np.arange(i + 1, n)
        a = X[js] - X[i]
        b = Y[js] - Y[i]
        g = np.gcd(a, b)
        a //= g
        b //= g
        neg = (b < 0) | ((b == 0) & (a < 0))
        a[neg] = -a[neg]
        b[neg] = -b[neg]
        key = a * (1 << 32) + b  # |a| < 2**31 and 0 <= b < 2**31: no overflow
        _, first, counts = np.unique(key, return_index=True, return_counts=True)
        if (counts == 1).all():
            return None
        # earliest second occurrence gives the smallest k
        dup_keys = set(key[first[counts > 1]].tolist())
        seen: dict[int, int] = {}
        for off, kv in enumerate(key.tolist()):
            if kv in dup_keys:
                if kv in seen:
                    return (i, seen[kv], i + 1 + off)
                seen[kv] = i + 1 + off
        return None
    seen2: dict[tuple[int, int], int] = {}
    for k in range(i + 1, n):
        a = xs[k] - xs[i]
        b = ys[k] - ys[i]
        g = math.gcd(a, b)
        a //= g
        b //= g
        if b < 0 or (b == 0 and a < 0):
            a, b = -a, -b
        j = seen2.get((a, b))
        if j is not None:
            return (i, j, k)
        seen2[(a, b)] = k
    return None


# ---------------------------------------------------------------- axes


def _direction_ints(dx: Real, dy: Real) -> tuple[int, int]:
    fx, fy = to_exact(dx), to_exact(dy)
    (a, b), _ = _ints_from_rationals([fx, fy])
    if a == 0 and b == 0:
        raise ValueError("axis direction must be non-zero")
    g = math.gcd(a, b)
    return a // g, b // g


def _half_canonical(a: int, b: int) -> tuple[int, int]:
    if b < 0 or (b == 0 and a < 0):
        return -a, -b
    return a, b


def _quarter_canonical(a: int, b: int) -> tuple[int, int]:
    while not (a > 0 and b >= 0):
        a, b = b, -a
    return a, b


def _exact_degrees_direction(deg: Fraction) -> tuple[int, int] | None:
    eighths = deg / 45
    if eighths.denominator != 1:
        return None
    return [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)][
        int(eighths) % 8
    ]


_FLOAT_DIRECTION_BITS = 62


def _float_direction(theta: float) -> tuple[int, int]:
    # rounded to a 62-bit lattice vector: far finer than a double angle, and
    # a tiny sine cannot blow up into a huge exact denominator
    k = 1 << _FLOAT_DIRECTION_BITS
    return round(math.cos(theta) * k), round(math.sin(theta) * k)


def _atan2(b: int, a: int) -> float:
    """``atan2`` for arbitrarily large integers."""
    m = max(abs(a), abs(b))
    return math.atan2(b / m, a / m)


@dataclass(frozen=True)
class Axis:
    """Direction of monotonicity, stored as a reduced integer vector.

    ``Axis(dx, dy)`` and ``Axis(-dx, -dy)`` are different objects but the
    same line; :meth:`canonical` maps both to the slope in ``[0, pi)``.
    """

    dx: int
    dy: int

    def __post_init__(self):
        a, b = _direction_ints(self.dx, self.dy)
        object.__setattr__(self, "dx", a)
        object.__setattr__(self, "dy", b)

    @classmethod
    def from_angle(cls, theta: float) -> Axis:
        return cls(*_float_direction(theta))

    @classmethod
    def from_degrees(cls, degrees: Real) -> Axis:
        deg = to_exact(degrees)
        exact = _exact_degrees_direction(deg)
        if exact is not None:
            return cls(*exact)
        return cls.from_angle(math.radians(float(deg)))

    @classmethod
    def perpendicular_to(cls, p, q) -> Axis:
        """Axis perpendicular to segment ``pq``: both ends project equally."""
        dx, dy = _as_point(q) - _as_point(p)
        return cls(-dy, dx).canonical()

    def canonical(self) -> Axis:
        return Axis(*_half_canonical(self.dx, self.dy))

    def flip(self) -> Axis:
        return Axis(-self.dx, -self.dy)

    def is_canonical(self) -> bool:
        return (self.dx, self.dy) == _half_canonical(self.dx, self.dy)

    @property
    def slope(self) -> float:
        """Slope angle of the axis line in ``[0, pi)``."""
        a, b = _half_canonical(self.dx, self.dy)
        return _atan2(b, a)

    @property
    def degrees(self) -> float:
        return math.degrees(self.slope)

    @property
    def unit(self) -> tuple[float, float]:
        m = max(abs(self.dx), abs(self.dy))
        ux, uy = self.dx / m, self.dy / m
        h = math.hypot(ux, uy)
        return ux / h, uy / h


@dataclass(frozen=True)
class OrthoSystem:
    """Ordered pair of perpendicular axes; the y-axis slope lies in ``[0, pi/2)``.

    Systems that differ by a quarter turn give identical trees, so any
    direction handed in is folded into that range.
    """

    y_axis: Axis

    def __post_init__(self):
        a, b = _quarter_canonical(self.y_axis.dx, self.y_axis.dy)
        object.__setattr__(self, "y_axis", Axis(a, b))

    @classmethod
    def from_vector(cls, dx: Real, dy: Real) -> OrthoSystem:
        return cls(Axis(dx, dy))

    @classmethod
    def from_angle(cls, theta: float) -> OrthoSystem:
        return cls(Axis.from_angle(theta))

    @classmethod
    def from_degrees(cls, degrees: Real) -> OrthoSystem:
        return cls(Axis.from_degrees(degrees))

    @property
    def x_axis(self) -> Axis:
        # y rotated a quarter turn clockwise: the standard (1,0) for y = (0,1)
        return Axis(self.y_axis.dy, -self.y_axis.dx)

    @property
    def slope(self) -> float:
        return _atan2(self.y_axis.dy, self.y_axis.dx)

    @property
    def degrees(self) -> float:
        return math.degrees(self.slope)

    def rotated(self, quarters: int = 1) -> OrthoSystem:
        """The same system turned by ``quarters`` right angles (folds back)."""
        a, b = self.y_axis.dx, self.y_axis.dy
        for _ in range(quarters % 4):
            a, b = -b, a
        return OrthoSystem(Axis(a, b))

    def coordinates(self, points: RootedPointSet, i: int) -> tuple[int, int]:
        """Exact (x', y') of point ``i`` in scaled units."""
        a, b = self.y_axis.dx, self.y_axis.dy
        X, Y = points.xs[i], points.ys[i]
        return X * b - Y * a, X * a + Y * b


def project(p, a: Axis) -> float:
    """Signed coordinate of ``p`` along the unit direction of ``a``."""
    p = _as_point(p)
    m = max(abs(a.dx), abs(a.dy))
    return float((p.x * a.dx + p.y * a.dy) / m) / math.hypot(a.dx / m, a.dy / m)


def compare_projections(p, q, a: Axis) -> int:
    """Sign of ``(p - q) . d`` for the stored direction ``d``: -1, 0 or 1."""
    dx, dy = _as_point(p) - _as_point(q)
    s = dx * a.dx + dy * a.dy
    return (s > 0) - (s < 0)


def squared_distance(p, q) -> Fraction:
    dx, dy = _as_point(p) - _as_point(q)
    return dx * dx + dy * dy


# ---------------------------------------------------------------- graphs


class GeometricGraph:
    """Rooted geometric graph: a point set plus undirected index pairs."""

    def __init__(self, points: RootedPointSet, edges: Iterable[Sequence[int]]):
        n = len(points)
        norm = set()
        for e in edges:
            i, j = (int(v) for v in e)
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {(i, j)} has an invalid endpoint")
            if i == j:
                raise ValueError(f"self-loop at {i}")
            key = (i, j) if i < j else (j, i)
            if key in norm:
                raise ValueError(f"duplicate edge {key}")
            norm.add(key)
        self.points = points
        self.edges = frozenset(norm)
        self._adj = None

    def __repr__(self) -> str:
        return f"GeometricGraph(n={len(self.points)}, m={len(self.edges)})"

    @property
    def adjacency(self) -> list[list[int]]:
        if self._adj is None:
            adj: list[list[int]] = [[] for _ in range(len(self.points))]
            for i, j in sorted(self.edges):
                adj[i].append(j)
                adj[j].append(i)
            self._adj = adj
        return self._adj

    def is_connected(self) -> bool:
        adj = self.adjacency
        seen = {self.points.root}
        stack = [self.points.root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == len(self.points)


class RootedTree:
    """Spanning tree given by parent links; ``cost`` is the Euclidean length."""

    def __init__(self, points: RootedPointSet, parent: dict[int, int]):
        n = len(points)
        if len(parent) != n - 1 or points.root in parent:
            raise ValueError("a rooted tree needs one parent per non-root point")
        for child, par in parent.items():
            if not 0 <= par < n or child == par:
                raise ValueError(f"bad parent link {child} -> {par}")
        self.points = points
        self.parent = dict(parent)
        self._check_acyclic()
        self.cost = math.fsum(points.dist(c, p) for c, p in self.parent.items())

    def _check_acyclic(self):
        depth_known = {self.points.root}
        for start in self.parent:
            path = []
            v = start
            while v not in depth_known:
                if v in path:
                    raise ValueError(f"parent links contain a cycle through {v}")
                path.append(v)
                v = self.parent[v]
            depth_known.update(path)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((min(c, p), max(c, p)) for c, p in self.parent.items())

    def as_graph(self) -> GeometricGraph:
        return GeometricGraph(self.points, self.edges)

    def __repr__(self) -> str:
        return f"RootedTree(n={len(self.points)}, cost={self.cost:.6g})"


def graph_cost(graph: GeometricGraph) -> float:
    pts = graph.points
    return math.fsum(pts.dist(i, j) for i, j in graph.edges)


# ---------------------------------------------------------------- critical slopes


@dataclass
class CriticalSequence:
    """Critical axes (or systems) in sweep order with their event pairs.

    Index ``2k`` is the k-th critical direction ``even[k]``; index ``2k+1``
    is the bisector ``odd[k]`` that follows it.  The pairs that become
    tied at ``even[k]`` are ``first[offsets[k]:offsets[k+1]]`` /
    ``second[...]``.
    """

    even: np.ndarray
    odd: np.ndarray
    offsets: np.ndarray
    first: np.ndarray
    second: np.ndarray
    quarter: bool = False

    def __len__(self) -> int:
        return 2 * len(self.even)

    @property
    def m(self) -> int:
        return len(self.even)

    def direction(self, index: int) -> tuple[int, int]:
        row = self.even[index // 2] if index % 2 == 0 else self.odd[index // 2]
        return int(row[0]), int(row[1])

    def axis(self, index: int) -> Axis:
        return Axis(*self.direction(index))

    def system(self, index: int) -> OrthoSystem:
        return OrthoSystem(self.axis(index))

    def pairs(self, k: int) -> list[tuple[int, int]]:
        lo, hi = int(self.offsets[k]), int(self.offsets[k + 1])
        return list(zip(self.first[lo:hi].tolist(), self.second[lo:hi].tolist()))


def _cross(a0, a1, b0, b1) -> int:
    return int(a0) * int(b1) - int(a1) * int(b0)


def critical_sequence(
    points: RootedPointSet,
    pairs: tuple[Sequence[int], Sequence[int]] | None = None,
    *,
    quarter: bool = False,
) -> CriticalSequence:
    """Group point pairs by the critical direction they induce and sort.

    Without ``quarter`` the critical direction of pair (p, q) is the axis
    perpendicular to pq, taken modulo pi.  With ``quarter`` it is the pq
    direction folded modulo pi/2 (parallel and perpendicular coincide).
    ``pairs`` defaults to all pairs of points.
    """
    n = len(points)
    if pairs is None:
        if n < 2:
            raise ValueError("critical slopes need at least two points")
        I, J = np.triu_indices(n, 1)
    else:
        I = np.asarray(pairs[0], dtype=np.int64)
        J = np.asarray(pairs[1], dtype=np.int64)
        if len(I) == 0:
            raise ValueError("critical slopes need at least one pair")
    X, Y = points.arrays()
    if points.fast:
        groups = _group_fast(X, Y, I, J, quarter)
    else:
        groups = _group_exact(points.xs, points.ys, I.tolist(), J.tolist(), quarter)
    even, offsets, first, second = groups
    odd = _bisectors(even, quarter)
    return CriticalSequence(even, odd, offsets, first, second, quarter)


def _canonical_arrays(a, b, quarter):
    if quarter:
        q2 = (a <= 0) & (b > 0)
        q3 = (a < 0) & (b <= 0)
        q4 = (a >= 0) & (b < 0)
        na = np.where(q2, b, np.where(q3, -a, np.where(q4, -b, a)))
        nb = np.where(q2, -a, np.where(q3, -b, np.where(q4, a, b)))
        return na, nb
    neg = (b < 0) | ((b == 0) & (a < 0))
    return np.where(neg, -a, a), np.where(neg, -b, b)


def _group_fast(X, Y, I, J, quarter):
    dx = X[J] - X[I]
    dy = Y[J] - Y[I]
    if quarter:
        a, b = dx, dy
    else:
        a, b = -dy, dx
    g = np.gcd(a, b)
    a = a // g
    b = b // g
    a, b = _canonical_arrays(a, b, quarter)
    ang = np.arctan2(b.astype(float), a.astype(float))
    order = np.lexsort((b, a, ang))
    a, b, ang, I, J = a[order], b[order], ang[order], I[order], J[order]
    change = np.ones(len(a), dtype=bool)
    change[1:] = (a[1:] != a[:-1]) | (b[1:] != b[:-1])
    starts = np.flatnonzero(change)
    offsets = np.append(starts, len(a)).astype(np.int64)
    even = np.stack([a[starts], b[starts]], axis=1)
    return _fix_group_order(even, ang[starts], offsets, I, J)


def _group_exact(xs, ys, I, J, quarter):
    canon = _quarter_canonical if quarter else _half_canonical
    buckets: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for i, j in zip(I, J):
        dx, dy = xs[j] - xs[i], ys[j] - ys[i]
        a, b = (dx, dy) if quarter else (-dy, dx)
        g = math.gcd(a, b)
        key = canon(a // g, b // g)
        buckets.setdefault(key, []).append((i, j))
    keys = sorted(buckets, key=lambda k: _atan2(k[1], k[0]))
    ang = np.array([_atan2(k[1], k[0]) for k in keys])
    even = np.empty((len(keys), 2), dtype=object)
    for r, k in enumerate(keys):
        even[r, 0], even[r, 1] = k
    sizes = [len(buckets[k]) for k in keys]
    offsets = np.zeros(len(keys) + 1, dtype=np.int64)
    offsets[1:] = np.cumsum(sizes)
    flat = [pr for k in keys for pr in buckets[k]]
    first = np.array([p[0] for p in flat], dtype=np.int64)
    second = np.array([p[1] for p in flat], dtype=np.int64)
    return _fix_group_order(even, ang, offsets, first, second)


def _fix_group_order(even, ang, offsets, first, second):
    """Float angles order the groups; repair any run where floats cannot."""
    m = len(even)
    close = np.flatnonzero(np.diff(ang) <= 1e-12)
    bad = [
        k
        for k in close.tolist()
        if _cross(even[k, 0], even[k, 1], even[k + 1, 0], even[k + 1, 1]) <= 0
    ]
    if not bad:
        return even, offsets, first, second
    order = list(range(m))
    cmp = cmp_to_key(
        lambda u, v: -1 if _cross(even[u, 0], even[u, 1], even[v, 0], even[v, 1]) > 0 else 1
    )
    closeset = set(close.tolist())
    k = 0
    while k < m:
        if k in closeset:
            s = k
            while k in closeset:
                k += 1
            order[s : k + 1] = sorted(order[s : k + 1], key=cmp)
        k += 1
    order_arr = np.array(order)
    sizes = np.diff(offsets)[order_arr]
    new_offsets = np.zeros(m + 1, dtype=np.int64)
    new_offsets[1:] = np.cumsum(sizes)
    idx = np.concatenate([np.arange(offsets[g], offsets[g + 1]) for g in order])
    return even[order_arr], new_offsets, first[idx], second[idx]


_BISECTOR_SCALE = float(1 << 60)


def _bisectors(even, quarter):
    """Bisector directions strictly inside each gap, validated exactly."""
    m = len(even)
    ef = even.astype(float)
    uf = ef / np.hypot(ef[:, 0], ef[:, 1])[:, None]
    vf = np.empty_like(uf)
    vf[:-1] = uf[1:]
    vf[-1] = (0.0, 1.0) if quarter else (-1.0, 0.0)
    w = uf + vf
    odd_f = np.rint(w * _BISECTOR_SCALE)
    c1 = uf[:, 0] * w[:, 1] - uf[:, 1] * w[:, 0]
    c2 = w[:, 0] * vf[:, 1] - w[:, 1] * vf[:, 0]
    sure = (c1 > 1e-9) & (c2 > 1e-9)
    odd = np.empty((m, 2), dtype=object if even.dtype == object else np.int64)
    odd[:] = odd_f.astype(np.int64)
    for k in np.flatnonzero(~sure).tolist():
        ua, ub = int(even[k, 0]), int(even[k, 1])
        if k + 1 < m:
            va, vb = int(even[k + 1, 0]), int(even[k + 1, 1])
        elif quarter:
            va, vb = 0, 1
        else:
            va, vb = -1, 0
        wa, wb = int(odd_f[k, 0]), int(odd_f[k, 1])
        if _cross(ua, ub, wa, wb) > 0 and _cross(wa, wb, va, vb) > 0:
            continue
        if k + 1 < m:
            wa, wb = ua + va, ub + vb
        elif quarter:
            wa, wb = ua, ub + ua + ub + 1
        elif ub == 0:
            wa, wb = 0, 1
        else:
            wa, wb = ua - (abs(ua) + ub + 1), ub
        if odd.dtype != object and max(abs(wa), abs(wb)) >= 1 << 62:
            odd = odd.astype(object)
        odd[k, 0], odd[k, 1] = wa, wb
    return odd


def critical_axes(points: RootedPointSet) -> list[Axis]:
    """Axes y_0 .. y_{2m-1}: critical slopes interleaved with bisectors."""
    seq = critical_sequence(points)
    return [seq.axis(i) for i in range(len(seq))]


def critical_systems(points: RootedPointSet) -> list[OrthoSystem]:
    """Orthogonal systems x_0y_0 .. x_{2m-1}y_{2m-1} folded into [0, pi/2)."""
    seq = critical_sequence(points, quarter=True)
    return [seq.system(i) for i in range(len(seq))]
