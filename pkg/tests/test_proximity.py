from __future__ import annotations

import math
import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from monotone_mst import SemiDynamicNN, SemiDynamicRangeNN
from monotone_mst.proximity import nn_insert, nn_query, rnn_insert, rnn_query


def _scan(points, q, keep=lambda i: True):
    best = None
    for i, (x, y) in enumerate(points):
        if not keep(i):
            continue
        d = (x - q[0]) ** 2 + (y - q[1]) ** 2
        if best is None or d < best[1]:
            best = (i, d)
    return best


class TestSemiDynamicNN:
    def test_examples(self):
        s = SemiDynamicNN()
        assert s.query((1, 0)) is None
        nn_insert(s, (0, 0))
        assert len(s) == 1
        nn_insert(s, (3, 4))
        assert nn_query(s, (1, 0)) == (0, 0)

    def test_block_count_follows_binary_size(self):
        s = SemiDynamicNN()
        rng = random.Random(1)
        for k in range(1, 1025):
            s.insert((rng.random(), rng.random()))
            assert s.substructure_count == bin(k).count("1")
            assert s.substructure_count <= math.ceil(math.log2(k + 1))

    def test_matches_linear_scan(self):
        rng = random.Random(2)
        s = SemiDynamicNN()
        pts = []
        for _ in range(10_000):
            if not pts or rng.random() < 0.5:
                p = (rng.randint(-500, 500), rng.randint(-500, 500))
                pts.append(p)
                s.insert(p)
            else:
                q = (rng.randint(-600, 600), rng.randint(-600, 600))
                h, d = s.nearest(q)
                i, dd = _scan(pts, q)
                assert d == dd
                # ties resolve to the earliest insertion
                assert h == i

    def test_exact_near_ties(self):
        # equal in doubles, different as rationals
        s = SemiDynamicNN()
        a = (Fraction(1), Fraction(0))
        b = (Fraction(0), Fraction(1) + Fraction(1, 10**20))
        s.insert(b)
        s.insert(a)
        assert s.query((0, 0)) == a

    def test_tie_by_item(self):
        s = SemiDynamicNN(tie_by_item=True)
        s.insert((1, 0), 7)
        s.insert((0, 1), 3)
        h, _ = s.nearest((0, 0))
        assert s.item(h) == 3

    @given(
        st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=1, max_size=70),
        st.tuples(st.integers(-25, 25), st.integers(-25, 25)),
    )
    def test_property_linear_scan(self, pts, q):
        s = SemiDynamicNN()
        for p in pts:
            s.insert(p)
        assert s.nearest(q) == _scan(pts, q)


class TestSemiDynamicRangeNN:
    def test_examples(self):
        s = SemiDynamicRangeNN()
        assert s.query((1, 0), 0, 2) is None
        rnn_insert(s, (0, 0), 5)
        assert len(s) == 1
        rnn_insert(s, (3, 4), 1)
        assert rnn_query(s, (1, 0), 0, 2) == (3, 4)
        assert s.query((1, 0), 6, 9) is None

    def test_duplicate_attributes(self):
        s = SemiDynamicRangeNN()
        s.insert((0, 0), 1.0)
        s.insert((5, 5), 1.0)
        assert s.query((0, 1), 1, 1) == (0, 0)
        assert s.query((5, 4), 1, 1) == (5, 5)

    def test_matches_filtered_scan(self):
        rng = random.Random(3)
        s = SemiDynamicRangeNN()
        pts, attrs = [], []
        for _ in range(6000):
            if not pts or rng.random() < 0.5:
                p = (rng.randint(-300, 300), rng.randint(-300, 300))
                a = rng.randint(0, 50)
                pts.append(p)
                attrs.append(a)
                s.insert(p, a)
            else:
                q = (rng.randint(-300, 300), rng.randint(-300, 300))
                lo = rng.randint(-5, 50)
                hi = lo + rng.randint(0, 30)
                got = s.nearest(q, lo, hi)
                want = _scan(pts, q, lambda i: lo <= attrs[i] <= hi)
                assert got == want

    def test_exact_attribute_boundaries(self):
        # attributes that collapse to the same double must still be separated
        s = SemiDynamicRangeNN()
        eps = Fraction(1, 10**30)
        s.insert((0, 0), Fraction(1))
        s.insert((0, 1), Fraction(1) + eps)
        assert s.query((0, 0), Fraction(1) + eps, 2) == (0, 1)
        assert s.query((0, 1), 0, Fraction(1)) == (0, 0)

    @given(
        st.lists(
            st.tuples(st.integers(-15, 15), st.integers(-15, 15), st.integers(0, 9)),
            min_size=1,
            max_size=60,
        ),
        st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
        st.integers(0, 9),
        st.integers(0, 9),
    )
    def test_property_filtered_scan(self, rows, q, lo, width):
        s = SemiDynamicRangeNN()
        for x, y, a in rows:
            s.insert((x, y), a)
        hi = lo + width
        want = _scan([(x, y) for x, y, _ in rows], q, lambda i: lo <= rows[i][2] <= hi)
        assert s.nearest(q, lo, hi) == want
