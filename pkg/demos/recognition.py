"""Recognise rooted monotone graphs for a fixed and for an unknown direction."""

from __future__ import annotations

from monotone_mst import (
    Axis,
    GeometricGraph,
    RootedPointSet,
    is_rooted_y_monotone,
    uniform_2d_monotone_system,
    uniform_monotone_axis,
)


def main() -> None:
    # up to (1, 1) then down to (2, 0.5): not y-monotone for the vertical axis
    P = RootedPointSet([(0, 0), (1, 1), (2, "0.5")])
    G = GeometricGraph(P, [(0, 1), (1, 2)])
    print("vertical axis      :", is_rooted_y_monotone(G, Axis(0, 1)))
    print("horizontal axis    :", is_rooted_y_monotone(G, Axis(1, 0)))
    a = uniform_monotone_axis(G)
    print("some axis works    :", a is not None and f"{a.degrees:.4f} deg")
    s = uniform_2d_monotone_system(G)
    print("some system works  :", s is not None and f"{s.degrees:.4f} deg")


if __name__ == "__main__":
    main()
