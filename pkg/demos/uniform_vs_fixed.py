"""Compare a fixed-axis monotone MST against the best axis over all directions."""

from __future__ import annotations

import random

from monotone_mst import Axis, RootedPointSet, ummst, ymmst
from monotone_mst.oracle import brute_ummst


def main() -> None:
    rng = random.Random(3)
    pts = [(0, 0)] + [(rng.randint(-500, 500), rng.randint(-500, 500)) for _ in range(40)]
    P = RootedPointSet(pts)

    vertical = ymmst(P, Axis(0, 1))
    best = ummst(P)
    _, oracle = brute_ummst(P)
    print(f"vertical axis cost : {vertical.cost:.3f}")
    print(f"best axis          : {best.direction.degrees:.4f} deg (sweep index {best.index})")
    print(f"best cost          : {best.cost:.3f}")
    print(f"brute-force cost   : {oracle.cost:.3f}")
    assert best.cost <= vertical.cost + 1e-9


if __name__ == "__main__":
    main()
