import json
import subprocess
import sys

from qerasure import code_to_json, fixture_gbp_code
from qerasure.cli import main


def run_cli(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_analyze_gbp_json(capsys):
    status, out, err = run_cli(capsys, "analyze", "--fixture", "gbp")
    assert status == 0 and err == ""
    report = json.loads(out)
    assert report["code"] == "gbp"
    assert (report["n"], report["K"]) == (4, 4)
    assert report["erasure"]["distance"] == 2
    assert report["erasure"]["dim"] == 241
    assert report["pure"]["dim"] == 240
    assert not report["erasure"]["degenerate"]


def test_analyze_rains_union_max_weight(capsys):
    status, out, _ = run_cli(capsys, "analyze", "--fixture", "rains-union",
                             "--max-weight", "2")
    assert status == 0
    report = json.loads(out)
    assert report["K"] == 6
    assert report["erasure"]["distance"] == 2
    weights = {row["w"]: row for row in report["erasure"]["per_weight"]}
    assert weights[1]["non_members"] == 0
    assert weights[2]["non_members"] == 60
    assert "XZIII" in weights[2]["violators"]


def test_classify_documented_schema(capsys):
    status, out, _ = run_cli(capsys, "classify", "--fixture", "rains-subcode",
                             "--pure", "--max-weight", "3")
    assert status == 0
    report = json.loads(out)
    assert set(report) == {"code", "pure", "per_weight", "dim", "distance"}
    assert report["pure"] is True
    assert report["distance"] == 3
    rows = {row["w"]: row for row in report["per_weight"]}
    assert rows[3]["non_members"] == 10
    assert set(rows[3]) == {"w", "members", "non_members", "violators"}
    # round trip through the schema
    assert json.loads(json.dumps(report)) == report


def test_distance_mode(capsys):
    status, out, _ = run_cli(capsys, "distance", "--fixture", "rains-subcode")
    assert status == 0
    report = json.loads(out)
    assert report["distance"] == 6 and report["degenerate"]
    assert report["pure_distance"] == 3 and not report["pure_degenerate"]


def test_union_mode_with_transform(capsys):
    status, out, _ = run_cli(
        capsys, "union", "--fixture", "gbp",
        "--transform", '{"locals": ["I", "I", "I", "Y"]}')
    assert status == 0
    report = json.loads(out)
    assert report["K"] == 8
    assert report["distance"] == 1
    assert report["theorem4"]["matches_direct"] is True
    assert report["theorem5"]["matches_direct"] is True


def test_union_fixture_without_theorems(capsys):
    status, out, _ = run_cli(capsys, "union", "--fixture", "rains-union")
    assert status == 0
    report = json.loads(out)
    assert report["K"] == 6
    assert len(report["components"]) == 6
    assert report["theorem4"] is None and report["theorem5"] is None


def test_union_from_two_files(tmp_path, capsys):
    base = fixture_gbp_code()
    from qerasure import gbp_pair_transform, transform_code

    image = transform_code(base, gbp_pair_transform(), label="image")
    f1 = tmp_path / "a.json"
    f2 = tmp_path / "b.json"
    f1.write_text(json.dumps(code_to_json(base)))
    f2.write_text(json.dumps(code_to_json(image)))
    status, out, _ = run_cli(capsys, "union", "--code", str(f1), "--code2", str(f2))
    assert status == 0
    report = json.loads(out)
    assert report["K"] == 8
    assert report["theorem4"] is None


def test_theorem_check_mode(capsys):
    status, out, _ = run_cli(
        capsys, "theorem-check", "--fixture", "gbp",
        "--transform", '{"locals": ["I", "I", "I", "Y"]}')
    assert status == 0
    report = json.loads(out)
    for key in ("theorem4", "theorem5"):
        assert report[key]["matches_direct"] is True
        assert report[key]["residual"] < 1e-8


def test_theorem_check_transform_file(tmp_path, capsys):
    spec = tmp_path / "t.json"
    spec.write_text('{"locals": ["I", "I", "I", "Y"]}')
    status, out, _ = run_cli(capsys, "theorem-check", "--fixture", "gbp",
                             "--transform", str(spec))
    assert status == 0


def test_table_format(capsys):
    status, out, _ = run_cli(capsys, "analyze", "--fixture", "gbp-union",
                             "--format", "table")
    assert status == 0
    assert "gbp-union" in out
    assert "distance 1" in out
    # weight-one violators grouped on one cyclic orbit line
    assert any("YIII IYII IIYI IIIY" in line for line in out.splitlines())


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    status, out, _ = run_cli(capsys, "distance", "--fixture", "gbp",
                             "--out", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["distance"] == 2


def test_unknown_fixture_error(capsys):
    status, out, err = run_cli(capsys, "analyze", "--fixture", "nope")
    assert status == 1 and out == ""
    assert err.startswith("qerasure: error[unknown-fixture]")
    assert err.count("\n") == 1


def test_bad_json_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    status, _, err = run_cli(capsys, "analyze", "--code", str(bad))
    assert status == 1
    assert err.startswith("qerasure: error[bad-json]")


def test_orthogonality_error(tmp_path, capsys):
    f1 = tmp_path / "a.json"
    f1.write_text(json.dumps(code_to_json(fixture_gbp_code())))
    status, _, err = run_cli(capsys, "union", "--code", str(f1), "--code2", str(f1))
    assert status == 1
    assert err.startswith("qerasure: error[orthogonality]")


def test_missing_mode_arguments(capsys):
    status, _, err = run_cli(capsys, "theorem-check", "--fixture", "gbp")
    assert status == 1
    assert "error[bad-arguments]" in err
    status, _, err = run_cli(capsys, "analyze")
    assert status == 1
    status, _, err = run_cli(capsys, "union", "--fixture", "gbp")
    assert status == 1


def test_invalid_code_error(tmp_path, capsys):
    f = tmp_path / "dup.json"
    f.write_text(json.dumps({"n": 2, "basis": [[(1, "00")], [(1, "00")]]}))
    status, _, err = run_cli(capsys, "analyze", "--code", str(f))
    assert status == 1
    assert err.startswith("qerasure: error[invalid-code]")


def test_mismatch_exit_code(monkeypatch, capsys):
    import qerasure.cli as cli_module

    def fake_check(code, t, tol=1e-8):
        return {
            "theorem4": {"dim": 1, "direct_dim": 2, "residual": 1.0,
                         "matches_direct": False},
            "theorem5": {"dim": 1, "direct_dim": 1, "residual": 0.0,
                         "matches_direct": True},
        }

    monkeypatch.setattr(cli_module, "cross_check_intersection_formulas", fake_check)
    status, out, err = run_cli(
        capsys, "theorem-check", "--fixture", "gbp",
        "--transform", '{"locals": ["I", "I", "I", "Y"]}')
    assert status == 2
    assert "error[formula-mismatch]" in err
    assert json.loads(out)["theorem4"]["matches_direct"] is False


def test_subprocess_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qerasure", "distance", "--fixture", "gbp"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["distance"] == 2
