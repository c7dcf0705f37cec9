from __future__ import annotations

import json
import math
import subprocess
import sys

import pytest

from monotone_mst.cli import main, resolve_direction
from monotone_mst.documents import format_number
from monotone_mst import Axis, OrthoSystem, RootedPointSet

PARABOLA = {"root": 0, "points": [[0, 0], [1, 1], [2, 4], [3, 9]]}


def _write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def _build(tmp_path, doc, *args):
    src = _write(tmp_path, "in.json", doc)
    out = tmp_path / "out.json"
    code = main(["build", "--input", src, "--out", str(out), *args])
    return code, (json.loads(out.read_text()) if code == 0 else None)


class TestBuild:
    def test_parabola(self, tmp_path):
        code, doc = _build(tmp_path, PARABOLA, "--variant", "y", "--direction", "90")
        assert code == 0
        assert doc["edges"] == [[0, 1], [1, 2], [2, 3]]
        assert doc["axis"] == {"slope_degrees": 90.0}
        assert doc["points"] == PARABOLA["points"]
        assert len(doc["edges"]) == len(doc["points"]) - 1

    def test_uniform_pair(self, tmp_path):
        code, doc = _build(tmp_path, {"root": 0, "points": [[0, 0], ["1.5", "2"]]}, "--variant", "uniform")
        assert code == 0
        assert doc["cost"] == pytest.approx(2.5)

    def test_uniform_2d(self, tmp_path):
        pts = {"root": 1, "points": [[1, "0.1"], [0, 0], [2, "-0.1"]]}
        code, doc = _build(tmp_path, pts, "--variant", "uniform-2d")
        assert code == 0
        assert "system" in doc
        assert doc["cost"] == pytest.approx(math.sqrt(1.01) + math.sqrt(1.04))
        assert doc["root"] == 1

    def test_xy_point_on_axis(self, tmp_path, capsys):
        code, _ = _build(tmp_path, {"root": 0, "points": [[0, 0], [1, 0], [2, 3]]}, "--variant", "xy", "--direction", "0")
        assert code == 2
        assert "point 1" in capsys.readouterr().err

    def test_collinear_and_flag(self, tmp_path, capsys):
        doc = {"root": 0, "points": [[0, 0], [1, 1], [2, 2], [1, 3]]}
        code, _ = _build(tmp_path, doc, "--variant", "uniform")
        assert code == 2
        assert "collinear" in capsys.readouterr().err
        code, _ = _build(tmp_path, doc, "--variant", "y", "--direction", "10", "--allow-degenerate")
        assert code == 0
        assert "warning" in capsys.readouterr().err

    def test_duplicates_always_fail(self, tmp_path):
        doc = {"root": 0, "points": [[0, 0], [1, 1], ["1.0", 1]]}
        code, _ = _build(tmp_path, doc, "--variant", "y", "--direction", "10", "--allow-degenerate")
        assert code == 2

    @pytest.mark.parametrize(
        "args",
        [
            ["--variant", "y"],
            ["--variant", "uniform", "--direction", "30"],
            ["--variant", "y", "--direction", "north"],
        ],
    )
    def test_direction_rules(self, tmp_path, args):
        assert _build(tmp_path, PARABOLA, *args)[0] == 2

    @pytest.mark.parametrize("text", ["{", '{"points": []}', '{"root": 9, "points": [[0,0]]}', '{"points": [[0]]}'])
    def test_bad_documents(self, tmp_path, text):
        assert _build(tmp_path, text, "--variant", "uniform")[0] == 2

    def test_missing_file(self, tmp_path):
        assert main(["build", "--input", str(tmp_path / "nope.json"), "--variant", "uniform"]) == 1

    def test_unwritable_output(self, tmp_path):
        src = _write(tmp_path, "in.json", PARABOLA)
        out = tmp_path / "missing-dir" / "out.json"
        assert main(["build", "--input", src, "--variant", "uniform", "--out", str(out)]) == 1

    def test_csv_alias(self, tmp_path):
        src = _write(tmp_path, "pts.csv", "0,0\n1,1\n2,4\n3,9\n")
        out = tmp_path / "o.json"
        assert main(["build", "--input", src, "--variant", "y", "--direction", "90", "--out", str(out)]) == 0
        assert json.loads(out.read_text())["edges"] == [[0, 1], [1, 2], [2, 3]]

    def test_exact_decimals_echoed(self, tmp_path):
        doc = {"root": 0, "points": [[0, 0], ["0.1", "0.30000000000000004"], [-2, "1e-3"]]}
        src = _write(tmp_path, "in.json", doc)
        out = tmp_path / "o.json"
        assert main(["build", "--input", src, "--variant", "uniform", "--out", str(out)]) == 0
        text = out.read_text()
        assert "[0.1, 0.30000000000000004]" in text
        assert "[-2, 0.001]" in text


class TestSvg:
    def test_counts_and_determinism(self, tmp_path):
        src = _write(tmp_path, "in.json", PARABOLA)
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for svg in (a, b):
            assert main(["build", "--input", src, "--variant", "y", "--direction", "90", "--out", str(tmp_path / "t.json"), "--svg", str(svg)]) == 0
        text = a.read_text()
        assert text == b.read_text()
        assert text.count("<circle") == 4
        assert text.count("<line") == 3
        assert text.count("<path") == 1
        assert text.startswith("<?xml")

    def test_system_draws_both_axes(self, tmp_path):
        src = _write(tmp_path, "in.json", PARABOLA)
        svg = tmp_path / "s.svg"
        assert main(["build", "--input", src, "--variant", "uniform-2d", "--out", str(tmp_path / "t.json"), "--svg", str(svg)]) == 0
        text = svg.read_text()
        assert text.count("<line") == 3 and text.count("<path") == 2


class TestRecognize:
    def _run(self, tmp_path, capsys, doc, *args):
        src = _write(tmp_path, "g.json", doc)
        code = main(["recognize", "--input", src, *args])
        return code, capsys.readouterr().out.strip()

    def test_star(self, tmp_path, capsys):
        doc = {"root": 0, "points": [[0, 0], [1, 2], [-3, 1], [2, -5]], "edges": [[0, 1], [0, 2], [0, 3]]}
        code, out = self._run(tmp_path, capsys, doc, "--variant", "uniform")
        assert code == 0 and out.startswith("true axis")

    def test_rise_fall(self, tmp_path, capsys):
        doc = {"root": 0, "points": [[0, 0], [1, 1], [2, "0.5"]], "edges": [[0, 1], [1, 2]]}
        code, out = self._run(tmp_path, capsys, doc, "--variant", "y", "--direction", "90")
        assert (code, out) == (0, "false")
        code, out = self._run(tmp_path, capsys, doc, "--variant", "uniform")
        assert out.startswith("true")

    def test_round_trip(self, tmp_path, capsys):
        pts = {"root": 2, "points": [[0, 0], [4, 1], [1, 1], [-2, 5], [3, -4], [-1, -3]]}
        for variant, direction in (("y", "33.5"), ("xy", "12"), ("uniform", None), ("uniform-2d", None)):
            args = ["--variant", variant] + (["--direction", direction] if direction else [])
            code, _ = _build(tmp_path, pts, *args)
            assert code == 0
            capsys.readouterr()
            tree = str(tmp_path / "out.json")
            rec_args = list(args)
            if variant in ("uniform", "uniform-2d"):
                # check the tree at the direction it was built for
                doc = json.loads((tmp_path / "out.json").read_text())
                if variant == "uniform":
                    rec_args = ["--variant", "y", "--direction", repr(doc["axis"]["slope_degrees"])]
                else:
                    rec_args = ["--variant", "xy", "--direction", repr(doc["system"]["y_slope_degrees"])]
            assert main(["recognize", "--input", tree, *rec_args]) == 0
            assert capsys.readouterr().out.startswith("true")

    def test_invalid_graph(self, tmp_path, capsys):
        doc = {"root": 0, "points": [[0, 0], [1, 1]], "edges": [[0, 0]]}
        assert self._run(tmp_path, capsys, doc, "--variant", "uniform")[0] == 2
        doc = {"root": 0, "points": [[0, 0], [1, 1], [3, 2]], "edges": [[0, 1]]}
        assert self._run(tmp_path, capsys, doc, "--variant", "uniform")[0] == 2


class TestOracleAndBench:
    def test_oracle_matches_build(self, tmp_path, capsys):
        pts = {"root": 0, "points": [[0, 0], [4, 1], [1, 3], [-2, 6], [3, -4]]}
        src = _write(tmp_path, "in.json", pts)
        for variant in ("uniform", "uniform-2d"):
            a, b = tmp_path / "a.json", tmp_path / "b.json"
            assert main(["build", "--input", src, "--variant", variant, "--out", str(a)]) == 0
            assert main(["oracle", "--input", src, "--variant", variant, "--out", str(b)]) == 0
            da, db = json.loads(a.read_text()), json.loads(b.read_text())
            assert da["cost"] == pytest.approx(db["cost"], rel=1e-9)

    def test_oracle_recognize(self, tmp_path, capsys):
        doc = {"root": 0, "points": [[0, 0], [1, 1], [2, "0.5"]], "edges": [[0, 1], [1, 2]]}
        src = _write(tmp_path, "g.json", doc)
        assert main(["oracle", "--recognize", "--input", src, "--variant", "y", "--direction", "90"]) == 0
        assert capsys.readouterr().out.strip() == "false"

    def test_bench_reproducible(self, capsys):
        args = ["bench", "--sizes", "2^5,2^6", "--variant", "all", "--seed", "3", "--repeats", "1", "--no-timing"]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        assert capsys.readouterr().out == first
        assert len(first.strip().splitlines()) == 1 + 2 * 4

    def test_bench_reports_ratios(self, capsys):
        assert main(["bench", "--sizes", "64,128", "--variant", "y", "--repeats", "1"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert "ratio" in lines[0]
        assert lines[1].split()[3] == "-"
        float(lines[2].split()[3])

    def test_module_entry_point(self, tmp_path):
        src = _write(tmp_path, "in.json", PARABOLA)
        res = subprocess.run(
            [sys.executable, "-m", "monotone_mst", "build", "--input", src, "--variant", "y", "--direction", "90"],
            capture_output=True, text=True,
        )
        assert res.returncode == 0
        assert json.loads(res.stdout)["edges"] == [[0, 1], [1, 2], [2, 3]]


class TestDirections:
    def test_snaps_to_root_critical_axis(self):
        P = RootedPointSet([(0, 0), (1, 2), (3, -1)])
        exact = Axis.perpendicular_to((0, 0), (1, 2))
        assert resolve_direction(P, repr(exact.degrees), "y") == exact
        s = OrthoSystem(Axis(1, 2))
        assert resolve_direction(P, repr(s.degrees), "xy") == s

    def test_generic_angle_stays_float(self):
        P = RootedPointSet([(0, 0), (1, 2), (3, -1)])
        a = resolve_direction(P, "10", "y")
        assert a.degrees == pytest.approx(10)

    def test_format_number(self):
        assert format_number(3) == "3"
        assert format_number("0.125") == "0.125"
        assert format_number("-1e-7") == "-0.0000001"
