from __future__ import annotations

import math
import random

import pytest
from hypothesis import given

from helpers import angles, point_sets, random_point_set
from monotone_mst import Axis, DegenerateInputError, RootedPointSet, is_rooted_y_monotone, ymmst, ymmst_one_side
from monotone_mst.oracle import brute_parent_ymmst
from monotone_mst.ymmst import half_sequences

STANDARD_Y = Axis(0, 1)


class TestExamples:
    def test_parabola_is_a_path(self):
        P = RootedPointSet([(0, 0), (1, 1), (2, 4), (3, 9)])
        assert ymmst(P, STANDARD_Y).edges == {(0, 1), (1, 2), (2, 3)}

    def test_two_points(self):
        P = RootedPointSet([(0, 0), (1, 2)])
        t = ymmst(P, STANDARD_Y)
        assert t.edges == {(0, 1)}
        assert t.cost == pytest.approx(math.sqrt(5))

    def test_closer_prefix_point_wins(self):
        P = RootedPointSet([(0, 0), (1, 1), (-1, "2.5")])
        assert ymmst(P, STANDARD_Y).parent == {1: 0, 2: 1}

    def test_both_halves(self):
        P = RootedPointSet([(0, 0), (1, 1), (-1, "2.5"), ("0.5", -1)])
        assert ymmst(P, STANDARD_Y).edges == {(0, 1), (1, 2), (0, 3)}

    def test_pair_any_axis(self):
        P = RootedPointSet([(0, 0), (5, 3)])
        for deg in (0, 10, 45, 90, 100):
            assert ymmst(P, Axis.from_degrees(deg)).edges == {(0, 1)}


class TestValidation:
    def test_point_on_root_line(self):
        P = RootedPointSet([(0, 0), (1, 1), (2, 0)])
        with pytest.raises(DegenerateInputError) as exc:
            ymmst(P, STANDARD_Y)
        assert exc.value.indices == (2,)

    def test_on_axis_allowed_joins_both_halves(self):
        P = RootedPointSet([(0, 0), (1, 1), (2, 0), (1, -3)])
        minus, plus = half_sequences(P, STANDARD_Y, allow_on_axis=True)
        assert 2 in minus.order and 2 in plus.order
        assert minus.parent[2] == plus.parent[2] == 0

    def test_one_side_rejects_mixed(self):
        P = RootedPointSet([(0, 0), (1, 1), (1, -1)])
        with pytest.raises(DegenerateInputError):
            ymmst_one_side(P, STANDARD_Y)
        Q = RootedPointSet([(0, 0), (1, 1), (-2, 3)])
        assert ymmst_one_side(Q, STANDARD_Y).edges == ymmst(Q, STANDARD_Y).edges


def _generic_axis(P, theta):
    a = Axis.from_angle(theta)
    if any(P.proj(i, a) == 0 for i in P.others()):
        return None
    return a


class TestProperties:
    @given(point_sets(2, 14), angles)
    def test_matches_oracle(self, P, theta):
        a = _generic_axis(P, theta)
        if a is None:
            return
        assert ymmst(P, a).edges == brute_parent_ymmst(P, a).edges

    @given(point_sets(2, 14), angles)
    def test_flip_invariant(self, P, theta):
        a = _generic_axis(P, theta)
        if a is None:
            return
        assert ymmst(P, a).parent == ymmst(P, a.flip()).parent

    @given(point_sets(2, 14), angles)
    def test_parents_are_lower_on_the_same_side(self, P, theta):
        a = _generic_axis(P, theta)
        if a is None:
            return
        t = ymmst(P, a)
        for p, q in t.parent.items():
            yp, yq = P.proj(p, a), P.proj(q, a)
            # no edge crosses the root line
            assert yp * yq >= 0
            assert abs(yq) <= abs(yp)

    @given(point_sets(2, 14), angles)
    def test_output_is_monotone(self, P, theta):
        a = _generic_axis(P, theta)
        if a is None:
            return
        t = ymmst(P, a)
        assert len(t.edges) == len(P) - 1
        assert is_rooted_y_monotone(t.as_graph(), a)

    def test_critical_axes_with_points_on_root_line(self, rng):
        from monotone_mst import critical_axes

        for _ in range(40):
            P = random_point_set(rng, rng.randint(2, 12), 40)
            for a in critical_axes(P):
                got = ymmst(P, a, allow_on_axis=True)
                assert got.edges == brute_parent_ymmst(P, a, allow_on_axis=True).edges

    def test_large_matches_oracle(self):
        rng = random.Random(5)
        P = random_point_set(rng, 200, 10**6)
        for _ in range(20):
            a = _generic_axis(P, rng.uniform(0, math.pi))
            assert ymmst(P, a).edges == brute_parent_ymmst(P, a).edges
