"""Wall-clock benchmarks over doubling sizes.

Each (variant, size) case draws a fixed-seed random point set, runs the
construction ``repeats`` times and reports the median.  The doubling ratio
``t(n) / t(n/2)`` is what the complexity smoke tests look at.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .geometry import Axis, OrthoSystem, RootedPointSet
from .ummst import ummst
from .ummst2d import ummst2d
from .xymmst import xymmst
from .ymmst import ymmst

__all__ = ["VARIANTS", "BenchRow", "random_point_set", "run_case", "run_bench", "format_table"]

VARIANTS = ("y", "xy", "uniform", "uniform-2d")

# generic directions for the fixed-direction variants
_BENCH_AXIS = Axis.from_degrees(37.3)
_BENCH_SYSTEM = OrthoSystem.from_degrees(37.3)
_COORD_RANGE = 1 << 28


@dataclass
class BenchRow:
    variant: str
    n: int
    seconds: float
    ratio: float | None
    cost: float


def random_point_set(n: int, seed: int) -> RootedPointSet:
    """``n`` distinct random lattice points, redrawn until in general position."""
    rng = np.random.default_rng([seed, n])
    while True:
        raw = rng.integers(0, _COORD_RANGE, size=(2 * n + 8, 2))
        seen: dict[tuple[int, int], None] = {}
        for x, y in raw.tolist():
            seen.setdefault((x, y), None)
            if len(seen) == n:
                break
        try:
            return RootedPointSet(list(seen), 0)
        except ValueError:
            continue


def _runner(variant: str):
    if variant == "y":
        return lambda P: ymmst(P, _BENCH_AXIS).cost
    if variant == "xy":
        return lambda P: xymmst(P, _BENCH_SYSTEM).cost
    if variant == "uniform":
        return lambda P: ummst(P).cost
    if variant == "uniform-2d":
        return lambda P: ummst2d(P).cost
    raise ValueError(f"unknown variant {variant!r}")


def run_case(variant: str, n: int, seed: int, repeats: int = 5) -> tuple[float, float]:
    """Median wall time and tree cost of one case."""
    P = random_point_set(n, seed)
    fn = _runner(variant)
    times, cost = [], 0.0
    for _ in range(max(1, repeats)):
        t0 = time.perf_counter()
        cost = fn(P)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), cost


def run_bench(sizes, variants, seed: int = 0, repeats: int = 5, warmup: bool = True) -> list[BenchRow]:
    rows = []
    for variant in variants:
        if warmup:
            # first call pays for JIT compilation
            run_case(variant, min(sizes), seed, 1)
        prev = None
        for n in sorted(sizes):
            t, cost = run_case(variant, n, seed, repeats)
            ratio = t / prev[1] if prev is not None and n == 2 * prev[0] and prev[1] > 0 else None
            rows.append(BenchRow(variant, n, t, ratio, cost))
            prev = (n, t)
    return rows


def format_table(rows: list[BenchRow], timing: bool = True) -> str:
    if timing:
        lines = [f"{'variant':<11} {'n':>7} {'median_s':>10} {'ratio':>6} {'cost':>16}"]
        for r in rows:
            ratio = f"{r.ratio:.2f}" if r.ratio is not None else "-"
            lines.append(f"{r.variant:<11} {r.n:>7} {r.seconds:>10.4f} {ratio:>6} {r.cost:>16.6f}")
    else:
        lines = [f"{'variant':<11} {'n':>7} {'cost':>16}"]
        for r in rows:
            lines.append(f"{r.variant:<11} {r.n:>7} {r.cost:>16.6f}")
    return "\n".join(lines) + "\n"
