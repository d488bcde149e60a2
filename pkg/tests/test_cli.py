import csv
import io
import json
import math
import os

import jsonschema
import pytest

from packcert.cli import (
    REPORT_SCHEMA,
    build_parser,
    load_pointset,
    main,
    write_pointset,
)
from packcert.constructions import icosahedron
from packcert.pointset import angle_set


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, "--format", "json")
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    return code, report


class TestExitCodes:
    def test_feasible_is_zero(self, capsys):
        code, _, _ = run_cli(capsys, "etf", "--d", "6", "--n", "16")
        assert code == 0

    def test_infeasible_is_one(self, capsys):
        code, _, _ = run_cli(capsys, "etf", "--d", "6", "--n", "18")
        assert code == 1

    def test_leven_infeasible_is_one(self, capsys):
        code, _, _ = run_cli(capsys, "leven", "--d", "7", "--n", "42")
        assert code == 1

    def test_usage_error_is_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["etf", "--d", "6"])  # missing --n
        assert exc.value.code == 2

    def test_domain_error_is_two(self, capsys):
        code, _, err = run_cli(capsys, "etf", "--d", "6", "--n", "3")
        assert code == 2 and "error" in err


class TestJsonReports:
    def test_etf_schema_and_roundtrip(self, capsys):
        code, report = run_json(capsys, "etf", "--d", "6", "--n", "16")
        assert code == 0
        assert report["verdict"] == "feasible"
        ids = [c["id"] for c in report["conditions"]]
        assert ids == ["gerzon", "aw_integrality", "srg_consistency", "krein", "coro1_window"]

    def test_leven_report_rationals(self, capsys):
        code, report = run_json(capsys, "leven", "--d", "7", "--n", "63")
        assert code == 0
        alpha = report["alpha_sq"]
        assert alpha["num"] == "1" and alpha["den"] == "4"
        assert alpha["approx"] == 0.25

    def test_bounds_values(self, capsys):
        code, report = run_json(capsys, "bounds", "--d", "7", "--s", "4", "--t", "5")
        assert code == 0
        by_id = {b["formula_id"]: b for b in report["bounds"]}
        assert by_id["dgs"]["value"]["num"] == "168"
        assert by_id["table1_row"]["value"]["num"] == "126"
        assert by_id["xxy"]["applicable"] is False

    def test_scan_ordered_by_d(self, capsys):
        code, report = run_json(capsys, "scan", "--mode", "etf", "--d-min", "5", "--d-max", "8")
        assert code == 0
        ds = [row["d"] for row in report["table"]]
        assert ds == [5, 6, 7, 8]
        survivors6 = [s["n"] for s in report["table"][1]["survivors"]]
        assert 16 in survivors6

    def test_scan_thread_cap_respected(self, capsys, monkeypatch):
        monkeypatch.setenv("PACKCERT_THREADS", "1")
        code, report = run_json(capsys, "scan", "--mode", "leven", "--d-min", "4", "--d-max", "7")
        assert code == 0
        by_d = {row["d"]: [s["n"] for s in row["survivors"]] for row in report["table"]}
        assert by_d[7] == [63]


class TestCsvReports:
    def test_row_count_matches_entries(self, capsys):
        code, out, _ = run_cli(capsys, "etf", "--d", "6", "--n", "16", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert len(rows) == 1 + 5  # header + five conditions

    def test_leven_table_rows(self, capsys):
        code, out, _ = run_cli(capsys, "leven", "--d", "7", "--format", "csv")
        rows = list(csv.reader(io.StringIO(out)))
        assert [r[0] for r in rows[1:]] == ["35", "39", "42", "63", "84"]


class TestPointsetFiles:
    def test_json_exact_roundtrip(self, tmp_path):
        path = tmp_path / "cross.json"
        rows = [["1", "0"], ["-1", "0"], ["0", "1"], ["0", "-1"]]
        path.write_text(json.dumps({"dim": 2, "tolerance": 1e-9, "points": rows}))
        ps = load_pointset(str(path))
        assert ps.mode == "exact" and ps.n == 4
        out = tmp_path / "echo.json"
        write_pointset(ps, str(out))
        again = load_pointset(str(out))
        assert again.mode == "exact"
        assert angle_set(again) == angle_set(ps)

    def test_json_fraction_strings(self, tmp_path):
        path = tmp_path / "frac.json"
        pts = [["3/5", "4/5"], ["-4/5", "3/5"]]
        path.write_text(json.dumps({"dim": 2, "points": pts}))
        ps = load_pointset(str(path))
        assert ps.mode == "exact"
        assert ps.exact_gram.value(0, 1) == 0

    def test_csv_roundtrip(self, tmp_path):
        path = tmp_path / "pts.csv"
        ps = icosahedron()
        write_pointset(ps, str(path), fmt="csv")
        again = load_pointset(str(path))
        assert again.n == 12 and again.mode == "float"

    def test_decimal_strings_fall_back_to_float(self, tmp_path):
        path = tmp_path / "dec.json"
        v = 1 / math.sqrt(2)
        pts = [[repr(v), repr(v)], [repr(v), repr(-v)]]
        path.write_text(json.dumps({"points": pts}))
        ps = load_pointset(str(path))
        assert ps.mode == "float" and ps.n == 2

    def test_dim_mismatch_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"dim": 5, "points": [[1.0, 0.0]]}))
        with pytest.raises(ValueError, match="dim"):
            load_pointset(str(path))


class TestVerifyAndConstruct:
    def test_construct_then_verify_design_claim(self, capsys, tmp_path):
        path = str(tmp_path / "icosa.json")
        code, _, _ = run_cli(capsys, "construct", "--name", "icosahedron", "--output", path)
        assert code == 0 and os.path.exists(path)
        code, _, _ = run_cli(capsys, "verify", "--input", path, "--claim", "design:5")
        assert code == 0

    def test_failed_claim_exits_one(self, capsys, tmp_path):
        path = str(tmp_path / "icosa.json")
        run_cli(capsys, "construct", "--name", "icosahedron", "--output", path)
        code, _, _ = run_cli(capsys, "verify", "--input", path, "--claim", "design:7")
        assert code == 1

    def test_tol_flag_honored(self, capsys, tmp_path):
        """A 1e-3-perturbed icosahedron certifies strength 5 only at a
        matching tolerance."""
        import numpy as np

        from packcert.constructions import icosahedron
        from packcert.pointset import PointSet

        rng = np.random.default_rng(99)
        pts = icosahedron().coords + rng.uniform(-1e-3, 1e-3, size=(12, 3))
        pts /= np.linalg.norm(pts, axis=1, keepdims=True)
        path = str(tmp_path / "wobbly.json")
        write_pointset(PointSet.from_floats(pts, tolerance=1e-2), path)
        assert run_cli(capsys, "verify", "--input", path, "--tol", "1e-9", "--claim", "design:5")[0] == 1
        assert run_cli(capsys, "verify", "--input", path, "--tol", "1e-3", "--claim", "design:5")[0] == 0

    def test_etf_claim_on_simplex(self, capsys, tmp_path):
        path = str(tmp_path / "simplex.json")
        run_cli(capsys, "construct", "--name", "simplex", "--d", "4", "--output", path)
        code, report = run_json(capsys, "verify", "--input", path, "--claim", "etf")
        assert code == 0
        assert report["profile"]["n"] == 5

    def test_leven_claim_on_derived_half(self, capsys, tmp_path):
        # e8-derived emits the full 126-point antipodal code; its half is
        # the packing, so the claim must fail on the full set
        path = str(tmp_path / "e7.json")
        run_cli(capsys, "construct", "--name", "e8-derived", "--output", path)
        code, report = run_json(capsys, "verify", "--input", path)
        assert code == 0
        assert report["profile"]["strength"] == 5
        assert report["profile"]["antipodal"] is True

    def test_construct_requires_d(self, capsys):
        code, _, err = run_cli(capsys, "construct", "--name", "cross", "--output", "/tmp/x.json")
        assert code == 2 and "requires --d" in err

    def test_construct_report_schema(self, capsys, tmp_path):
        path = str(tmp_path / "cp.json")
        code, report = run_json(capsys, "construct", "--name", "cross", "--d", "3", "--output", path)
        assert code == 0
        assert report["n"] == 6 and report["mode"] == "exact"

    def test_unknown_claim_rejected(self, capsys, tmp_path):
        path = str(tmp_path / "icosa.json")
        run_cli(capsys, "construct", "--name", "icosahedron", "--output", path)
        code, _, err = run_cli(capsys, "verify", "--input", path, "--claim", "magic")
        assert code == 2 and "unknown claim" in err


class TestParser:
    def test_subcommand_required(self):
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args([])
        assert exc.value.code == 2
