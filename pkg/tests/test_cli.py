import json
import subprocess
import sys

from algcomplete.cli import run_report


def write_catalog(tmp_path, entries, name="cat.json"):
    path = tmp_path / name
    path.write_text(json.dumps(entries))
    return str(path)


def test_empty_catalog_classify(tmp_path):
    path = write_catalog(tmp_path, [])
    out = tmp_path / "r.json"
    assert run_report(["--catalog", path, "--mode", "classify", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["objects"] == []
    assert report["schema"] == "algcomplete-report/1"
    assert not report["failed"]


def test_classify_small_catalog(tmp_path):
    path = write_catalog(tmp_path, [
        {"name": "Z2", "cyclic": 2},
        {"name": "S3", "symmetric": 3},
    ])
    out = tmp_path / "r.json"
    assert run_report(["--catalog", path, "--mode", "classify", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())["objects"]
    assert rows[0]["proto_complete"] and not rows[0]["strong_complete"]
    assert rows[1]["strong_complete"]


def test_crosscheck_bound_one(tmp_path):
    path = write_catalog(tmp_path, [{"name": "S3", "symmetric": 3}])
    out = tmp_path / "r.json"
    rc = run_report(["--catalog", path, "--mode", "oracle-crosscheck",
                     "--bound", "1", "--out", str(out)])
    assert rc == 0
    rows = json.loads(out.read_text())["objects"]
    assert rows[0]["agree"]


def test_audit_mode(tmp_path):
    path = write_catalog(tmp_path, [
        {"name": "Z2", "cyclic": 2},
        {"name": "Z4", "cyclic": 4},
        {"name": "S3", "symmetric": 3},
    ])
    out = tmp_path / "r.json"
    assert run_report(["--catalog", path, "--mode", "audit", "--out", str(out)]) == 0
    rows = json.loads(out.read_text())["objects"]
    assert all(r["violations"] == [] for r in rows)
    z2 = next(r for r in rows if r["name"] == "Z2")
    assert z2["oracle_proto"]["holds"] and not z2["oracle_complete"]["holds"]


def test_paper_examples_mode(tmp_path):
    out = tmp_path / "r.json"
    assert run_report(["--mode", "paper-examples", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert all(c["pass"] for c in report["checks"])
    names = {c["check"] for c in report["checks"]}
    assert "S3 strong-complete" in names and "sl2(F5) strong-complete" in names


def test_reports_byte_identical_across_runs_and_jobs(tmp_path):
    path = write_catalog(tmp_path, [
        {"name": "Z2", "cyclic": 2},
        {"name": "Z3", "cyclic": 3},
        {"name": "S3", "symmetric": 3},
        {"name": "Z6", "cyclic": 6},
    ])
    outs = []
    for jobs in ("1", "1", "3"):
        out = tmp_path / f"r{len(outs)}.json"
        rc = run_report(["--catalog", path, "--mode", "classify",
                         "--jobs", jobs, "--out", str(out)])
        assert rc == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_env_mirrors(tmp_path, monkeypatch):
    path = write_catalog(tmp_path, [{"name": "Z2", "cyclic": 2}])
    out = tmp_path / "r.json"
    monkeypatch.setenv("ALGC_CATALOG", path)
    monkeypatch.setenv("ALGC_MODE", "classify")
    monkeypatch.setenv("ALGC_OUT", str(out))
    assert run_report([]) == 0
    assert json.loads(out.read_text())["objects"][0]["name"] == "Z2"


def test_bad_catalog_is_config_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run_report(["--catalog", str(path), "--mode", "classify"]) == 2


def test_missing_catalog_is_config_error(tmp_path):
    assert run_report(["--catalog", str(tmp_path / "nope.json")]) == 2


def test_console_script_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "algcomplete.cli", "--mode", "paper-examples"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["failed"] is False
