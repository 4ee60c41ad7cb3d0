import csv
import json

import pytest

from knotforge.catalog import default_catalog_dir
from knotforge.cli import REPORT_COLUMNS, main

CAT = default_catalog_dir()


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestBuild:
    def test_figure8_lifted(self, capsys, tmp_path):
        out_file = tmp_path / "k.json"
        code, out, _ = run(capsys, "build", CAT / "4_1.json", "--method", "lifted", "-o", out_file)
        assert code == 0
        assert "sticks: x=4 y=5 z=5" in out
        assert len(json.loads(out_file.read_text())["vertices"]) == 14

    def test_trefoil_lifted_not_applicable(self, capsys):
        code, _, err = run(capsys, "build", CAT / "3_1.json", "--method", "lifted")
        assert code != 0 and "not applicable" in err

    def test_trefoil_reduced(self, capsys):
        code, out, _ = run(capsys, "build", CAT / "3_1.json", "--method", "reduced")
        assert code == 0 and "total=28" in out

    @pytest.mark.parametrize("fmt, head", [("obj", "v "), ("csv", "x,y,z")])
    def test_export_formats(self, capsys, tmp_path, fmt, head):
        out_file = tmp_path / f"k.{fmt}"
        code, _, _ = run(capsys, "build", CAT / "4_1.json", "-o", out_file, "--format", fmt)
        assert code == 0 and out_file.read_text().startswith(head)

    def test_schema_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"name": "x"}')
        code, _, err = run(capsys, "build", bad)
        assert code == 1 and "crossing_number" in err


class TestBounds:
    def test_general(self, capsys):
        code, out, _ = run(capsys, "bounds", "--crossings", 8, "--class", "general")
        assert code == 0 and "exact_value: 112" in out

    def test_torus(self, capsys):
        code, out, _ = run(capsys, "bounds", "--torus", 3)
        assert code == 0 and "exact_value: 60" in out and "theorem_value: 60" in out

    def test_nonalt(self, capsys):
        code, out, _ = run(capsys, "bounds", "--crossings", 8, "--class", "nonalt-prime")
        assert code == 0 and "exact_value: 66" in out and "133/2" in out

    def test_trefoil_torus_rejected(self, capsys):
        code, _, err = run(capsys, "bounds", "--torus", 2)
        assert code == 1 and "3_1" in err


class TestVerify:
    @pytest.fixture
    def built_trefoil(self, capsys, tmp_path):
        path = tmp_path / "3_1.lattice.json"
        assert main(["build", str(CAT / "3_1.json"), "-o", str(path)]) == 0
        capsys.readouterr()
        return path

    def test_pass(self, capsys, built_trefoil):
        code, out, _ = run(capsys, "verify", built_trefoil, "--against", CAT / "3_1.json")
        assert code == 0 and "alexander: pass" in out

    def test_mismatch(self, capsys, built_trefoil):
        code, out, _ = run(capsys, "verify", built_trefoil, "--against", CAT / "4_1.json")
        assert code != 0 and "alexander: FAIL" in out

    def test_square(self, capsys, tmp_path):
        sq = tmp_path / "square.json"
        sq.write_text(json.dumps({"vertices": [[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]]}))
        code, out, _ = run(capsys, "verify", sq, "--against", CAT / "4_1.json")
        assert code != 0 and "properly_leveled: FAIL" in out


class TestCatalog:
    def test_full_catalog(self, capsys, tmp_path):
        report = tmp_path / "run.csv"
        code, out, _ = run(capsys, "catalog", "--report", report)
        assert code == 0
        rows = list(csv.DictReader(report.open()))
        assert list(rows[0]) == REPORT_COLUMNS
        assert [r["name"] for r in rows][:3] == ["3_1", "4_1", "5_1"]
        assert all(r["passed"] == "True" for r in rows)
        fig8 = next(r for r in rows if r["name"] == "4_1")
        assert 30 <= int(fig8["total_edges"]) <= 32

    def test_parallel_same_report(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "catalog", "--report", a)
        run(capsys, "catalog", "--report", b, "--jobs", 2)
        assert a.read_text() == b.read_text()

    def test_empty_dir(self, capsys, tmp_path):
        code, _, err = run(capsys, "catalog", "--dir", tmp_path)
        assert code != 0 and "no entries" in err
