"""Command-line front end.

Subcommands::

    monotone-mst build     --input pts.json --variant y --direction 90 --out tree.json [--svg t.svg]
    monotone-mst recognize --input graph.json --variant uniform
    monotone-mst bench     --sizes 1024,2048,4096 --variant y --seed 0
    monotone-mst oracle    --input pts.json --variant uniform --out tree.json

Exit status is 0 on success, 2 when the input fails validation and 1 when a
file cannot be read or written.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import oracle as _oracle
from .bench import VARIANTS, format_table, run_bench
from .documents import DocumentError, dumps, read_graph, read_points, tree_document
from .geometry import Axis, DegenerateInputError, OrthoSystem, RootedPointSet, to_exact
from .recognition import (
    is_rooted_xy_monotone,
    is_rooted_y_monotone,
    uniform_2d_monotone_system,
    uniform_monotone_axis,
)
from .svg import tree_svg
from .ummst import ummst
from .ummst2d import ummst2d
from .xymmst import xymmst
from .ymmst import ymmst

__all__ = ["main", "resolve_direction"]

_SNAP_DEGREES = 1e-9


class _Invalid(Exception):
    """Validation failure, reported with exit status 2."""


def _angle_gap(a: float, b: float, period: float) -> float:
    d = (a - b) % period
    return min(d, period - d)


def resolve_direction(points: RootedPointSet, degrees: str, variant: str, pairs=()):
    """Turn user degrees into an :class:`Axis` or :class:`OrthoSystem`.

    Multiples of 45 degrees are exact.  An angle within ``1e-9`` degrees of a
    critical direction of a root pair (or of one of ``pairs``) snaps to that
    exact direction, since a floating approximation would put the point on
    the wrong side.  Anything else uses a floating direction.
    """
    try:
        deg = to_exact(degrees)
    except (TypeError, ValueError):
        raise _Invalid(f"direction {degrees!r} is not a decimal number of degrees") from None
    quarter = variant == "xy"
    base = OrthoSystem.from_degrees(deg) if quarter else Axis.from_degrees(deg).canonical()
    if deg % 45 == 0:
        return base
    period = 90.0 if quarter else 180.0
    r = points.root
    cands = [(r, q) for q in points.others()] + list(pairs)
    xs, ys = points.xs, points.ys
    want = float(deg)
    for u, v in cands:
        dx, dy = xs[v] - xs[u], ys[v] - ys[u]
        exact = OrthoSystem(Axis(dx, dy)) if quarter else Axis(-dy, dx).canonical()
        if _angle_gap(exact.degrees, want, period) < _SNAP_DEGREES:
            return exact
    return base


def _load_points(args) -> RootedPointSet:
    try:
        return read_points(args.input)
    except DegenerateInputError as exc:
        if not args.allow_degenerate or "duplicate" in str(exc):
            raise
        print(f"warning: {exc}; continuing, results are unspecified", file=sys.stderr)
        return read_points(args.input, allow_degenerate=True)


def _load_graph(args):
    try:
        return read_graph(args.input)
    except DegenerateInputError as exc:
        if not args.allow_degenerate or "duplicate" in str(exc):
            raise
        print(f"warning: {exc}; continuing, results are unspecified", file=sys.stderr)
        return read_graph(args.input, allow_degenerate=True)


def _check_direction(args):
    fixed = args.variant in ("y", "xy")
    if fixed and args.direction is None:
        raise _Invalid(f"--direction is required for variant {args.variant}")
    if not fixed and args.direction is not None:
        raise _Invalid(f"--direction is not allowed for variant {args.variant}")


def _construct(points: RootedPointSet, args, brute: bool):
    v = args.variant
    if v in ("y", "xy"):
        d = resolve_direction(points, args.direction, v)
        if v == "y":
            tree = _oracle.brute_parent_ymmst(points, d) if brute else ymmst(points, d)
        else:
            tree = _oracle.brute_xymmst(points, d) if brute else xymmst(points, d)
        return d, tree
    if len(points) == 1:
        d = Axis(0, 1) if v == "uniform" else OrthoSystem(Axis(0, 1))
        return d, (ymmst(points, d) if v == "uniform" else xymmst(points, d))
    if v == "uniform":
        return _oracle.brute_ummst(points) if brute else tuple(ummst(points))
    return _oracle.brute_ummst2d(points) if brute else tuple(ummst2d(points))


def _write(path, text: str):
    Path(path).write_text(text, encoding="utf-8")


def _emit_tree(args, direction, tree):
    doc = dumps(tree_document(tree, direction))
    if args.out:
        _write(args.out, doc)
    else:
        sys.stdout.write(doc)
    if args.svg:
        _write(args.svg, tree_svg(tree, direction))


def cmd_build(args) -> int:
    _check_direction(args)
    points = _load_points(args)
    _emit_tree(args, *_construct(points, args, brute=False))
    return 0


def cmd_oracle(args) -> int:
    _check_direction(args)
    if args.recognize:
        graph = _load_graph(args)
        if args.variant in ("y", "xy"):
            d = resolve_direction(graph.points, args.direction, args.variant, sorted(graph.edges))
            ok = _oracle.brute_is_rooted_monotone(graph, d)
        elif args.variant == "uniform":
            d = _oracle.brute_uniform_axis(graph)
            ok = d is not None
        else:
            d = _oracle.brute_uniform_system(graph)
            ok = d is not None
        print(_verdict(ok, d))
        return 0
    points = _load_points(args)
    _emit_tree(args, *_construct(points, args, brute=True))
    return 0


def _verdict(ok: bool, d) -> str:
    if not ok:
        return "false"
    if isinstance(d, OrthoSystem):
        return f"true system y_slope_degrees={d.degrees!r}"
    return f"true axis slope_degrees={d.canonical().degrees!r}"


def cmd_recognize(args) -> int:
    _check_direction(args)
    graph = _load_graph(args)
    v = args.variant
    if v in ("y", "xy"):
        d = resolve_direction(graph.points, args.direction, v, sorted(graph.edges))
        ok = is_rooted_y_monotone(graph, d) if v == "y" else is_rooted_xy_monotone(graph, d)
    elif v == "uniform":
        d = uniform_monotone_axis(graph)
        ok = d is not None
    else:
        d = uniform_2d_monotone_system(graph)
        ok = d is not None
    print(_verdict(ok, d))
    return 0


def _parse_sizes(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if "^" in tok:
            b, e = tok.split("^")
            out.append(int(b) ** int(e))
        elif tok:
            out.append(int(tok))
    if not out or min(out) < 2:
        raise _Invalid("--sizes needs integers >= 2")
    return out


def cmd_bench(args) -> int:
    try:
        sizes = _parse_sizes(args.sizes)
    except ValueError:
        raise _Invalid(f"cannot parse --sizes {args.sizes!r}") from None
    variants = list(VARIANTS) if args.variant == "all" else [args.variant]
    rows = run_bench(sizes, variants, seed=args.seed, repeats=args.repeats)
    sys.stdout.write(format_table(rows, timing=not args.no_timing))
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="monotone-mst", description="Rooted monotone minimum spanning trees.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph: bool):
        sp.add_argument("--input", required=True, help="JSON document (or CSV of x,y lines)")
        sp.add_argument("--variant", required=True, choices=VARIANTS)
        sp.add_argument("--direction", help="axis slope (y) or y-axis slope (xy) in decimal degrees")
        sp.add_argument("--allow-degenerate", action="store_true", help="warn instead of failing on collinear triples")
        if not graph:
            sp.add_argument("--out", help="TreeDocument path (default: standard output)")
            sp.add_argument("--svg", help="also render the tree as SVG")

    b = sub.add_parser("build", help="construct a monotone MST")
    common(b, graph=False)
    b.set_defaults(func=cmd_build)

    r = sub.add_parser("recognize", help="test a graph for rooted monotonicity")
    common(r, graph=True)
    r.set_defaults(func=cmd_recognize)

    o = sub.add_parser("oracle", help="brute-force reference for small inputs")
    common(o, graph=False)
    o.add_argument("--recognize", action="store_true", help="treat the input as a graph and test it")
    o.set_defaults(func=cmd_oracle)

    be = sub.add_parser("bench", help="time the constructions over doubling sizes")
    be.add_argument("--sizes", default="1024,2048,4096", help="comma list; 2^k is accepted")
    be.add_argument("--variant", default="y", choices=VARIANTS + ("all",))
    be.add_argument("--seed", type=int, default=0)
    be.add_argument("--repeats", type=int, default=5)
    be.add_argument("--no-timing", action="store_true", help="omit wall times so the output is reproducible")
    be.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (_Invalid, DocumentError, DegenerateInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
