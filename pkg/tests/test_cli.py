import io
import json
import math
import xml.etree.ElementTree as ET

import pandas as pd
import pytest

from cli.main import main
from cli.schemas import ReportDocument

SVG = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestVerify:
    def test_square_k2(self, capsys):
        code, out = run(capsys, "verify", "square", "--k", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == "1.0"
        assert doc["command"] == "verify"
        assert doc["inputs"] == {"grid_radius": 50, "k": 2, "lattice": "square"}
        report = doc["results"]["report"]
        assert report["matrix"] == [[1, -1], [-1, 3]]
        assert report["scalar"]["radical"] == "(2-sqrt(2))/2"
        assert abs(float(report["scalar"]["decimal"]) - 0.2928932188) < 1e-10
        assert report["scale"]["radical"] == "3-2*sqrt(2)"
        assert abs(float(report["scale"]["decimal"]) - 0.1715728753) < 1e-10
        assert report["grid"] == {"radius": 50, "checked": 101 ** 2, "failures": 0, "injective": True}
        assert report["ideal"] == {"is_principal": True, "generator": [2, -2], "index": 8}
        assert doc["results"]["claim_holds"]

    def test_triangular(self, capsys):
        code, out = run(capsys, "verify", "triangular")
        assert code == 0
        report = json.loads(out)["results"]["report"]
        assert report["matrix"] == [[0, 1], [-1, 4]]
        assert report["scalar"]["radical"] == "2-sqrt(3)"
        assert abs(float(report["scalar"]["decimal"]) - 0.2679491924) < 1e-10
        assert report["det"] == 1
        assert report["verified"]

    @pytest.mark.parametrize("argv", [
        ["verify", "square", "--k", "0"],
        ["verify", "square"],
        ["verify", "triangular", "--k", "2"],
        ["verify", "hexagonal"],
        ["verify", "square", "--k", "2", "--grid-radius", "0"],
        [],
    ])
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == 2

    def test_round_trip_and_determinism(self, capsys):
        _, first = run(capsys, "verify", "square", "--k", "3", "--grid-radius", "5")
        _, second = run(capsys, "verify", "square", "--k", "3", "--grid-radius", "5")
        assert first == second
        doc = ReportDocument.model_validate_json(first)
        assert doc.model_dump_json(indent=2) + "\n" == first

    def test_table_format(self, capsys):
        code, out = run(capsys, "--format", "table", "verify", "square", "--k", "2", "--grid-radius", "3")
        assert code == 0
        assert "(2-sqrt(2))/2" in out
        assert "[[1,-1],[-1,3]]" in out


class TestFamily:
    def test_rows(self, capsys):
        code, out = run(capsys, "family", "--k-max", "3")
        assert code == 0
        rows = json.loads(out)["results"]["rows"]
        golden, silver, third = rows
        assert golden["tan_theta"]["radical"] == "(-1+sqrt(5))/2"
        assert abs(float(golden["tan_theta"]["decimal"]) - 0.6180339887) < 1e-10
        assert abs(float(golden["theta_degrees"]) - 31.7175) < 0.05
        assert golden["scale"]["radical"] == "(3-sqrt(5))/2"
        assert abs(float(golden["scale"]["decimal"]) - 0.3819660113) < 1e-10
        assert golden["matrix"] == [[2, -1], [-1, 3]]
        assert golden["det"] == 5
        assert abs(float(silver["theta_degrees"]) - 22.5) < 1e-9
        assert third["matrix"] == [[2, -3], [-3, 11]]
        assert [r["raw_det"] for r in rows] == [5, 8, 13]

    def test_decimals_carry_enough_digits(self, capsys):
        _, out = run(capsys, "family", "--k-max", "4")
        for row in json.loads(out)["results"]["rows"]:
            digits = row["scale"]["decimal"].lstrip("-0.").replace(".", "")
            assert len(digits) >= 10

    def test_table(self, capsys):
        code, out = run(capsys, "family", "--k-max", "2", "--format", "table")
        assert code == 0
        assert "k=1" in out and "k=2" in out

    def test_k_max_must_be_positive(self, capsys):
        assert main(["family", "--k-max", "0"]) == 2


class TestSearch:
    def test_triangular_integers(self, capsys):
        code, out = run(capsys, "search", "--lattice", "triangular", "--k-int", "1..20", "--grid-radius", "2")
        assert code == 0
        results = json.loads(out)["results"]
        assert results["candidates"] == 20
        assert results["findings"] == []

    def test_square_integers(self, capsys):
        _, out = run(capsys, "search", "--lattice", "square", "--k-int", "1..5", "--grid-radius", "2")
        assert len(json.loads(out)["results"]["findings"]) == 5

    def test_triangular_sqrt3(self, capsys):
        _, out = run(capsys, "search", "--lattice", "triangular", "--k-sqrt3", "1..6", "--grid-radius", "2")
        findings = json.loads(out)["results"]["findings"]
        assert [f["family"] for f in findings] == ["k=2*sqrt(3)", "k=4*sqrt(3)", "k=6*sqrt(3)"]
        assert findings[0]["matrix"] == [[0, 1], [-1, 4]]
        assert findings[1]["matrix"] == [[-1, 10], [-4, 27]]
        assert findings[1]["tan_theta"]["radical"] == "-2*sqrt(3)+sqrt(13)"
        assert findings[2]["det"] == 7

    @pytest.mark.parametrize("argv", [
        ["search", "--lattice", "square", "--k-int", "5..1"],
        ["search", "--lattice", "square", "--k-int", "one..two"],
        ["search", "--lattice", "square", "--k-mixed", "1..2"],
        ["search", "--lattice", "square"],
        ["search", "--lattice", "square", "--k-int", "1..2", "--k-sqrt3", "1..2"],
    ])
    def test_bad_ranges(self, capsys, argv):
        assert main(argv) == 2


class TestPoints:
    def test_square_rows(self, capsys):
        code, out = run(capsys, "points", "square", "--k", "2", "--radius", "2")
        assert code == 0
        assert out.splitlines()[0] == "m,n,x,y,x',y',M_m,M_n"
        assert "\r" not in out
        frame = pd.read_csv(io.StringIO(out))
        assert len(frame) == 25
        origin = frame[(frame.m == 0) & (frame.n == 0)].iloc[0]
        assert (origin == 0).all()
        row = frame[(frame.m == 1) & (frame.n == 0)].iloc[0]
        assert row["x'"] == pytest.approx(0.292893218813, abs=1e-12)
        assert row["y'"] == pytest.approx(-0.292893218813, abs=1e-12)
        assert (row.M_m, row.M_n) == (1, -1)

    def test_triangular_row(self, capsys):
        _, out = run(capsys, "points", "triangular", "--radius", "1")
        frame = pd.read_csv(io.StringIO(out))
        row = frame[(frame.m == 1) & (frame.n == 0)].iloc[0]
        assert row["x'"] == pytest.approx(0.133974596216, abs=1e-12)
        assert row["y'"] == pytest.approx(-0.232050807569, abs=1e-12)

    def test_integer_columns_reproduce_the_map(self, capsys):
        _, out = run(capsys, "points", "square", "--k", "3", "--radius", "3")
        frame = pd.read_csv(io.StringIO(out))
        assert (frame.M_m == 2 * frame.m - 3 * frame.n).all()
        assert (frame.M_n == -3 * frame.m + 11 * frame.n).all()

    def test_radius_zero(self, capsys):
        assert main(["points", "square", "--k", "2", "--radius", "0"]) == 2


class TestRender:
    def test_square_k2(self, tmp_path):
        path = tmp_path / "fig.svg"
        assert main(["render", "square", "--k", "2", "--radius", "8", "--output", str(path)]) == 0
        root = ET.parse(path).getroot()
        assert root.get("version") == "1.1"
        lattice = root.find(f"{SVG}g[@id='lattice']")
        images = root.find(f"{SVG}g[@id='images']")
        assert len(lattice.findall(f"{SVG}circle")) == 289
        assert all(c.get("fill") == "none" for c in lattice)
        assert len(images.findall(f"{SVG}circle")) == 289
        lines = root.findall(f"{SVG}line")
        assert len(lines) == 1
        angle = math.degrees(math.atan2(-float(lines[0].get("y2")), float(lines[0].get("x2"))))
        assert angle == pytest.approx(22.5, abs=0.01)

    def test_triangular_unit_cell(self, tmp_path):
        path = tmp_path / "tri.svg"
        assert main(["render", "triangular", "--radius", "1", "--output", str(path)]) == 0
        root = ET.parse(path).getroot()
        assert len(root.find(f"{SVG}g[@id='lattice']")) == 9
        corners = root.find(f"{SVG}polygon").get("points").split()
        # 1 + omega and 2 + omega
        assert "20.000,-34.641" in corners
        assert "60.000,-34.641" in corners

    def test_deterministic_bytes(self, tmp_path):
        first, second = tmp_path / "a.svg", tmp_path / "b.svg"
        main(["render", "square", "--k", "3", "--radius", "3", "--output", str(first)])
        main(["render", "square", "--k", "3", "--radius", "3", "--output", str(second)])
        assert first.read_bytes() == second.read_bytes()

    def test_radius_zero(self):
        assert main(["render", "triangular", "--radius", "0"]) == 2

    def test_unwritable_path(self, tmp_path):
        path = tmp_path / "missing" / "fig.svg"
        assert main(["render", "square", "--k", "2", "--output", str(path)]) == 3


class TestCheckFloat:
    def test_square_k3(self, capsys):
        code, out = run(capsys, "check-float", "square", "--k", "3", "--samples", "10000", "--tol", "1e-9")
        assert code == 0
        results = json.loads(out)["results"]
        assert results["samples"] == 10000
        assert results["passed"]

    def test_origin_only(self, capsys):
        code, out = run(capsys, "check-float", "triangular", "--samples", "1", "--tol", "1e-30")
        assert code == 0
        results = json.loads(out)["results"]
        assert float(results["max_deviation"]) == 0.0
        assert results["worst_point"] == [0, 0]

    def test_tolerance_below_rounding(self, capsys):
        code, out = run(capsys, "check-float", "square", "--k", "3", "--samples", "200", "--tol", "1e-30")
        assert code == 1
        assert not json.loads(out)["results"]["passed"]

    def test_seed_reproducible(self, capsys):
        _, first = run(capsys, "check-float", "triangular", "--samples", "50", "--seed", "7")
        _, second = run(capsys, "check-float", "triangular", "--samples", "50", "--seed", "7")
        assert first == second

    @pytest.mark.parametrize("argv", [
        ["check-float", "square", "--k", "2", "--samples", "0"],
        ["check-float", "square", "--k", "2", "--tol", "0"],
    ])
    def test_usage_errors(self, argv):
        assert main(argv) == 2

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [1, 2, 5, 10, 25, 50])
    def test_family_members(self, capsys, k):
        code, _ = run(capsys, "check-float", "square", "--k", str(k))
        assert code == 0

    @pytest.mark.slow
    def test_triangular(self, capsys):
        code, _ = run(capsys, "check-float", "triangular")
        assert code == 0
