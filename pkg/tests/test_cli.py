import json
import subprocess
import sys

import pytest

from hidsym import suites
from hidsym.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(["--list"], capsys)
    assert code == 0
    entries = json.loads(out)["suites"]
    assert len(entries) == 14
    assert "thm-glue-covers" in [e["name"] for e in entries]
    assert all(e["anchor"] for e in entries)


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = run(["no-such-suite"], capsys)
    assert code == 2
    assert "unknown suite" in err
    with pytest.raises(suites.UnknownSuite):
        suites.run_suite("no-such-suite")


def test_bad_flags_are_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["all", "--format", "yaml"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert run(["all", "--depth", "-1"], capsys)[0] == 2


def test_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("VERIFY_DEPTH", "deep")
    assert run(["registry-audit"], capsys)[0] == 2


def test_permarep_report(capsys):
    code, out, _ = run(["lemma-permarep", "--no-timing"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "lemma-permarep"
    assert report["elapsed_ms"] == 0
    assert len(report["results"]) == 24
    for r in report["results"]:
        assert set(r) == {"name", "status", "expected", "actual", "witness", "paper_ref"}
        assert r["status"] == "pass"


def test_all_is_deterministic(capsys):
    first = run(["all", "--no-timing"], capsys)
    second = run(["all", "--no-timing"], capsys)
    assert first == second
    report = json.loads(first[1])
    statuses = [r["status"] for r in report["results"]]
    assert first[0] == 0
    assert len(statuses) >= 60 and "fail" not in statuses
    assert statuses.count("assumption") == 6


def test_env_overrides(capsys, monkeypatch):
    monkeypatch.setenv("VERIFY_FORMAT", "text")
    monkeypatch.setenv("VERIFY_NO_TIMING", "1")
    code, out, _ = run(["remark-minimality"], capsys)
    assert code == 0
    assert out.startswith("suite remark-minimality")
    assert "(0 ms)" in out
    code, out, _ = run(["remark-minimality", "--format", "json"], capsys)
    assert json.loads(out)["elapsed_ms"] == 0


def test_depth_too_small_fails(capsys):
    code, out, _ = run(["prop-boundary", "--depth", "2", "--no-timing"], capsys)
    assert code == 1
    failing = [r for r in json.loads(out)["results"] if r["status"] == "fail"]
    assert failing and all(r["witness"] for r in failing)


def test_polyhedron_file(tmp_path, capsys):
    good = tmp_path / "good.txt"
    good.write_text("interior 1/4 2\nB0 B1 right\nB0 rB0 2pi/3\nB0 B2 disjoint\niH iH+1/2 tangent-at-infinity\n")
    code, out, _ = run(["--polyhedron", str(good)], capsys)
    assert code == 0 and json.loads(out)["mismatches"] == 0
    bad = tmp_path / "bad.txt"
    bad.write_text("B0 B1 pi/3\n")
    assert run(["--polyhedron", str(bad)], capsys)[0] == 1
    assert run(["--polyhedron", str(tmp_path / "missing.txt")], capsys)[0] == 2
    # the default interior point lies on iH+1/2
    on_face = tmp_path / "on_face.txt"
    on_face.write_text("iH iH+1/2 tangent-at-infinity\n")
    code, _, err = run(["--polyhedron", str(on_face)], capsys)
    assert code == 2 and "reference point" in err


def test_express(capsys):
    code, out, _ = run(["--express", "m1*s*m1^-1", "--group", "Delta0"], capsys)
    assert code == 0
    assert json.loads(out)["word"] == "t*s*t*s^-1*t^-1*s^-1*t^-1"
    code, out, _ = run(["--express", "c", "--group", "Delta0", "--depth", "2"], capsys)
    assert code == 1
    assert json.loads(out)["message"] == "not in ball of radius 2"
    code, _, err = run(["--express", "[[1, 1], [0, 3]]"], capsys)
    assert code == 2 and "not a square" in err


def test_export(capsys):
    code, out, _ = run(["--export-graph", "2", "--graph-format", "dot"], capsys)
    assert code == 0 and out.startswith("graph cover {")
    code, out, _ = run(["--export-graph", "1,1"], capsys)
    assert code == 0 and "<graphml" in out
    assert run(["--export-graph", "1,2,3"], capsys)[0] == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "hidsym.cli", "registry-audit", "--no-timing", "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.rstrip().endswith("25 pass, 0 fail, 0 assumption  (0 ms)")
