"""Lift numbers onto a parabola; the y-monotone MST is the sorted path.

Any algorithm for fixed-axis monotone MSTs therefore sorts, which is why
n log n is the best one can hope for.
"""

from __future__ import annotations

import random

from monotone_mst import Axis, RootedPointSet, ymmst


def main() -> None:
    rng = random.Random(7)
    values = rng.sample(range(1, 100), 12)
    P = RootedPointSet([(0, 0)] + [(v, v * v) for v in values])
    tree = ymmst(P, Axis(0, 1))

    child = {p: c for c, p in tree.parent.items()}
    walk, u = [], P.root
    while u in child:
        u = child[u]
        walk.append(values[u - 1])
    print("input :", values)
    print("walk  :", walk)
    assert walk == sorted(values)


if __name__ == "__main__":
    main()
