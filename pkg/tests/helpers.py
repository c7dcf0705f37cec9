"""Shared generators and strategies for the test suite."""

from __future__ import annotations

import math
import random

from hypothesis import assume
from hypothesis import strategies as st

from monotone_mst import DegenerateInputError, GeometricGraph, RootedPointSet, validate_general_position


def random_point_set(rng: random.Random, n: int, spread: int = 1000, *, root=None) -> RootedPointSet:
    """Random general-position lattice set with up to ``n`` points (at least 2)."""
    n = max(2, n)
    while True:
        pts = list({(rng.randint(-spread, spread), rng.randint(-spread, spread)) for _ in range(n)})
        if len(pts) < 2:
            continue
        try:
            r = rng.randrange(len(pts)) if root is None else min(root, len(pts) - 1)
            return RootedPointSet(pts, r)
        except DegenerateInputError:
            n = max(2, n - 1)


def random_graph(rng: random.Random, points: RootedPointSet, extra: int | None = None) -> GeometricGraph:
    """Random spanning tree plus a few random chords."""
    n = len(points)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        u, v = order[k], order[rng.randrange(k)]
        edges.add((min(u, v), max(u, v)))
    for _ in range(rng.randint(0, n) if extra is None else extra):
        if n < 2:
            break
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    return GeometricGraph(points, edges)


def star(points: RootedPointSet) -> GeometricGraph:
    r = points.root
    return GeometricGraph(points, [(min(r, i), max(r, i)) for i in points.others()])


def rel_close(a: float, b: float, tol: float = 1e-9) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


coords = st.integers(min_value=-60, max_value=60)


@st.composite
def point_sets(draw, min_size: int = 2, max_size: int = 12):
    """Hypothesis strategy for rooted general-position integer point sets."""
    raw = draw(st.lists(st.tuples(coords, coords), min_size=min_size, max_size=max_size, unique=True))
    root = draw(st.integers(min_value=0, max_value=len(raw) - 1))
    P = RootedPointSet(raw, root, check_general_position=False)
    assume(validate_general_position(P) is None)
    return P


angles = st.floats(min_value=0.0, max_value=math.pi, allow_nan=False, exclude_max=True)
