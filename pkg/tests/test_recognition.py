from __future__ import annotations

import random

import pytest
from hypothesis import given

from helpers import angles, point_sets, random_graph, random_point_set, star
from monotone_mst import (
    Axis,
    DisconnectedGraphError,
    GeometricGraph,
    OrthoSystem,
    RootedPointSet,
    critical_axes,
    critical_sequence,
    critical_systems,
    is_rooted_xy_monotone,
    is_rooted_y_monotone,
    uniform_2d_monotone_system,
    uniform_monotone_axis,
    ummst,
    ummst2d,
    xymmst,
    ymmst,
)
from monotone_mst.oracle import brute_is_rooted_monotone, brute_uniform_axis, brute_uniform_system
from monotone_mst.recognition import (
    is_rooted_xy_monotone_by_count,
    is_rooted_y_monotone_by_count,
    y_digraph,
)

STANDARD_Y = Axis(0, 1)


def _rise_fall():
    P = RootedPointSet([(0, 0), (1, 1), (2, "0.5")])
    return GeometricGraph(P, [(0, 1), (1, 2)])


class TestFixedDirection:
    def test_rise_then_fall(self):
        G = _rise_fall()
        assert not is_rooted_y_monotone(G, STANDARD_Y)
        assert not is_rooted_y_monotone_by_count(G, STANDARD_Y)
        assert not is_rooted_xy_monotone(G, OrthoSystem(STANDARD_Y))

    def test_star_always_monotone(self, rng):
        P = random_point_set(rng, 12)
        G = star(P)
        for a in critical_axes(P):
            assert is_rooted_y_monotone(G, a)
        for s in critical_systems(P):
            assert is_rooted_xy_monotone(G, s)

    def test_crossing_edge_dropped(self):
        P = RootedPointSet([(0, 0), (1, -1), (2, 3)])
        G = GeometricGraph(P, [(0, 1), (1, 2)])
        out = y_digraph(G, STANDARD_Y)
        # arcs lead away from the root; 1-2 crosses the root line
        assert out == [[1], [], []]
        assert not is_rooted_y_monotone(G, STANDARD_Y)

    def test_disconnected(self):
        P = RootedPointSet([(0, 0), (1, 1), (2, 5)])
        G = GeometricGraph(P, [(0, 1)])
        for fn in (is_rooted_y_monotone, is_rooted_y_monotone_by_count):
            with pytest.raises(DisconnectedGraphError):
                fn(G, STANDARD_Y)
        with pytest.raises(DisconnectedGraphError):
            uniform_monotone_axis(G)


class TestUniform:
    def test_rise_fall_path_has_an_axis(self):
        G = _rise_fall()
        a = uniform_monotone_axis(G)
        assert a is not None and brute_is_rooted_monotone(G, a)
        # the slope-0 axis works too: projections 0, 1, 2
        assert is_rooted_y_monotone(G, Axis(1, 0))

    def test_triangle(self):
        P = RootedPointSet([(0, 0), (1, 2), (-1, 2)])
        G = GeometricGraph(P, [(0, 1), (1, 2), (0, 2)])
        assert uniform_monotone_axis(G) is not None
        assert is_rooted_y_monotone(G, STANDARD_Y)

    def test_star_returns_first_system(self, rng):
        P = random_point_set(rng, 8)
        G = star(P)
        r = P.root
        pairs = sorted((min(r, q), max(r, q)) for q in P.others())
        seq = critical_sequence(P, ([u for u, _ in pairs], [v for _, v in pairs]), quarter=True)
        # the sweep only visits directions that are critical for the graph
        assert uniform_2d_monotone_system(G) == seq.system(0)

    def test_rejected_everywhere(self):
        # a zig-zag around the root: no system works
        rng = random.Random(4)
        found = 0
        while found < 3:
            P = random_point_set(rng, 5, 20)
            G = random_graph(rng, P, extra=0)
            if brute_uniform_system(G) is None:
                assert uniform_2d_monotone_system(G) is None
                found += 1

    def test_single_point(self):
        G = GeometricGraph(RootedPointSet([(3, 3)]), [])
        assert uniform_monotone_axis(G) is not None
        assert uniform_2d_monotone_system(G) is not None


class TestAgainstOracle:
    def test_random_graphs(self):
        rng = random.Random(11)
        for _ in range(150):
            P = random_point_set(rng, rng.randint(2, 7), rng.choice([4, 30, 1000]))
            G = random_graph(rng, P)
            A, S = critical_axes(P), critical_systems(P)
            for a in rng.sample(A, min(3, len(A))):
                want = brute_is_rooted_monotone(G, a)
                assert is_rooted_y_monotone(G, a) == want
                assert is_rooted_y_monotone_by_count(G, a) == want
            for s in rng.sample(S, min(3, len(S))):
                want = brute_is_rooted_monotone(G, s)
                assert is_rooted_xy_monotone(G, s) == want
                assert is_rooted_xy_monotone_by_count(G, s) == want
            a = uniform_monotone_axis(G)
            assert (a is None) == (brute_uniform_axis(G) is None)
            assert a is None or brute_is_rooted_monotone(G, a)
            s = uniform_2d_monotone_system(G)
            assert (s is None) == (brute_uniform_system(G) is None)
            assert s is None or brute_is_rooted_monotone(G, s)

    @given(point_sets(2, 8), angles)
    def test_count_matches_reachability(self, P, theta):
        G = random_graph(random.Random(len(P) * 1000 + int(theta * 100)), P)
        a = Axis.from_angle(theta)
        assert is_rooted_y_monotone(G, a) == is_rooted_y_monotone_by_count(G, a)
        s = OrthoSystem.from_angle(theta)
        assert is_rooted_xy_monotone(G, s) == is_rooted_xy_monotone_by_count(G, s)


class TestConstructionsPass:
    @given(point_sets(2, 12), angles)
    def test_ymmst_output(self, P, theta):
        a = Axis.from_angle(theta)
        if any(P.proj(i, a) == 0 for i in P.others()):
            return
        G = ymmst(P, a).as_graph()
        assert is_rooted_y_monotone(G, a)
        assert uniform_monotone_axis(G) is not None

    @given(point_sets(2, 12), angles)
    def test_xymmst_output(self, P, theta):
        s = OrthoSystem.from_angle(theta)
        if any(0 in s.coordinates(P, i) for i in P.others()):
            return
        G = xymmst(P, s).as_graph()
        assert is_rooted_xy_monotone(G, s)
        assert uniform_2d_monotone_system(G) is not None

    @given(point_sets(2, 10))
    def test_sweep_outputs(self, P):
        a, t = ummst(P)
        assert is_rooted_y_monotone(t.as_graph(), a)
        s, t2 = ummst2d(P)
        assert is_rooted_xy_monotone(t2.as_graph(), s)
        assert uniform_2d_monotone_system(t2.as_graph()) is not None
