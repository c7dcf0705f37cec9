"""JSON and CSV documents for point sets, graphs and trees.

Coordinates are read as exact decimals (JSON floats never pass through
binary floating point) and written back in their shortest exact decimal
form when one exists.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from decimal import Decimal
from pathlib import Path

from .geometry import Axis, GeometricGraph, OrthoSystem, RootedPointSet, RootedTree, to_exact

__all__ = [
    "DocumentError",
    "read_points",
    "read_graph",
    "parse_point_document",
    "tree_document",
    "dumps",
    "format_number",
]


class DocumentError(ValueError):
    """Malformed input document."""


def _parse_json(text: str):
    try:
        return json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None


def _parse_csv(text: str) -> dict:
    pts = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), 1):
        if not row or not "".join(row).strip():
            continue
        if len(row) != 2:
            raise DocumentError(f"line {lineno}: expected 'x,y'")
        pts.append([row[0].strip(), row[1].strip()])
    return {"root": 0, "points": pts}


def _load(path: str | Path):
    text = Path(path).read_text(encoding="utf-8")
    if str(path).lower().endswith(".csv") or not text.lstrip().startswith("{"):
        return _parse_csv(text)
    return _parse_json(text)


def parse_point_document(doc, *, allow_degenerate: bool = False) -> RootedPointSet:
    if not isinstance(doc, dict) or "points" not in doc:
        raise DocumentError("document needs a 'points' list")
    raw = doc["points"]
    if not isinstance(raw, list) or not raw:
        raise DocumentError("'points' must be a non-empty list")
    pts = []
    for k, p in enumerate(raw):
        if not isinstance(p, (list, tuple)) or len(p) != 2:
            raise DocumentError(f"point {k} must be an [x, y] pair")
        try:
            pts.append((to_exact(p[0]), to_exact(p[1])))
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"point {k}: {exc}") from None
    root = doc.get("root", 0)
    if isinstance(root, bool) or not isinstance(root, int) or not 0 <= root < len(pts):
        raise DocumentError(f"root {root!r} is not a valid point index")
    return RootedPointSet(pts, root, check_general_position=not allow_degenerate)


def read_points(path, *, allow_degenerate: bool = False) -> RootedPointSet:
    return parse_point_document(_load(path), allow_degenerate=allow_degenerate)


def read_graph(path, *, allow_degenerate: bool = False) -> GeometricGraph:
    doc = _load(path)
    points = parse_point_document(doc, allow_degenerate=allow_degenerate)
    edges = doc.get("edges") if isinstance(doc, dict) else None
    if not isinstance(edges, list):
        raise DocumentError("graph document needs an 'edges' list")
    for k, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) and not isinstance(v, bool) for v in e)):
            raise DocumentError(f"edge {k} must be an [i, j] pair of indices")
    try:
        return GeometricGraph(points, edges)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def format_number(v) -> str:
    """Exact decimal text when it exists, otherwise the float repr."""
    f = to_exact(v) if not isinstance(v, float) else None
    if f is None:
        return repr(float(v))
    if f.denominator == 1:
        return str(f.numerator)
    d = f.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return repr(float(f))
    digits = max(twos, fives)
    text = str(Decimal(f.numerator * (10**digits) // f.denominator).scaleb(-digits))
    if "E" in text:
        text = format(Decimal(text), "f")
    return text


_PAIR = re.compile(r"\[\s*([^\[\]\s,]+),\s*([^\[\]\s,]+)\s*\]")


class _Raw(str):
    """A number already rendered as JSON text."""


def dumps(obj) -> str:
    """``json.dumps`` with exact numbers rendered verbatim."""
    marks: dict[str, str] = {}

    def encode(o):
        if isinstance(o, _Raw):
            key = f"\x00{len(marks)}\x00"
            marks[key] = str(o)
            return key
        if isinstance(o, dict):
            return {k: encode(v) for k, v in o.items()}
        if isinstance(o, (list, tuple)):
            return [encode(v) for v in o]
        return o

    text = json.dumps(encode(obj), indent=2)
    # keep coordinate and edge pairs on one line
    text = _PAIR.sub(lambda m: f"[{m.group(1)}, {m.group(2)}]", text)
    for key, val in marks.items():
        text = text.replace(json.dumps(key), val)
    return text + "\n"


def _num(v) -> _Raw:
    if isinstance(v, float):
        if not math.isfinite(v):
            raise ValueError("non-finite number in output")
        return _Raw(repr(v))
    return _Raw(format_number(v))


def tree_document(tree: RootedTree, direction) -> dict:
    P = tree.points
    doc = {
        "root": P.root,
        "points": [[_num(p.x), _num(p.y)] for p in P.points],
    }
    if isinstance(direction, OrthoSystem):
        doc["system"] = {"y_slope_degrees": _num(direction.degrees)}
    elif isinstance(direction, Axis):
        doc["axis"] = {"slope_degrees": _num(direction.degrees)}
    doc["edges"] = [list(e) for e in sorted(tree.edges)]
    doc["cost"] = _num(tree.cost)
    return doc
