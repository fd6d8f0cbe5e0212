import json
import subprocess
import sys
from pathlib import Path

import pytest

from semicross.cli import main, parse_window, UsageError

SYSTEMS = Path(__file__).resolve().parent.parent / "systems"


def run_json(tmp_path, *argv):
    out = tmp_path / "out.json"
    code = main([*argv, "--out", str(out)])
    return code, json.loads(out.read_text())


def test_norm_of_single_shift(tmp_path):
    code, doc = run_json(tmp_path, "norm", "--system", str(SYSTEMS / "circle2.ini"), "--element", str(SYSTEMS / "s1.elem"), "--window", "8")
    assert code == 0 and doc["exit"] == 0 and doc["ok"]
    assert doc["reports"][0]["data"]["lower_bound"] >= 0.95


def test_validate_bundled_systems(tmp_path):
    for name in ["circle2.ini", "circle23.ini", "shift2.ini", "finite6.ini"]:
        code, doc = run_json(tmp_path, "validate", "--system", str(SYSTEMS / name))
        assert code == 0, doc["failed"]


def test_missing_element_file(tmp_path):
    code, doc = run_json(tmp_path, "norm", "--system", str(SYSTEMS / "circle2.ini"), "--element", str(tmp_path / "nope.elem"))
    assert code == 2
    assert doc["error"]["kind"] == "missing-file"


def test_parse_error_carries_line_and_field(tmp_path):
    bad = tmp_path / "bad.ini"
    bad.write_text("[system]\nbackend = circle\npoint = 0\n\n[circle]\nmultipliers = two\n")
    code, doc = run_json(tmp_path, "validate", "--system", str(bad))
    assert code == 2
    assert doc["error"]["line"] == 6 and doc["error"]["field"] == "circle.multipliers"


def test_validation_failure_names_the_label(tmp_path):
    bad = tmp_path / "f.ini"
    bad.write_text("[system]\nbackend = finite\npoint = a\n[finite]\nlabels = a, b, c\ngenerators = m\n[map m]\na = b\nb = a\nc = a\n")
    code, doc = run_json(tmp_path, "validate", "--system", str(bad))
    assert code == 1
    assert doc["error"]["kind"] == "validation"
    assert "c" in doc["error"]["message"]


def test_unknown_command_is_a_usage_error(capsys):
    assert main(["frobnicate", "--system", str(SYSTEMS / "circle2.ini")]) == 2


def test_bad_window_is_a_usage_error(tmp_path):
    code, doc = run_json(tmp_path, "orbit", "--system", str(SYSTEMS / "circle23.ini"), "--window", "3,4,5")
    assert code == 2


def test_parse_window():
    assert parse_window("4", 2).bounds == (4, 4)
    assert parse_window("3,5", 2).bounds == (3, 5)
    with pytest.raises(UsageError):
        parse_window("0", 1)


def test_csv_orbit_table(tmp_path):
    out = tmp_path / "orbit.csv"
    assert main(["orbit", "--system", str(SYSTEMS / "circle2.ini"), "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "index,point,gen0"
    assert lines[1:] == ["0,1/3,1", "1,2/3,0"]


def test_dot_graph(tmp_path):
    dot = tmp_path / "orbit.dot"
    main(["orbit", "--system", str(SYSTEMS / "circle2.ini"), "--out", str(tmp_path / "o.json"), "--dot", str(dot)])
    text = dot.read_text()
    assert text.startswith("digraph") and 'label="1/3"' in text and "n1 -> n0" in text


def test_outputs_are_deterministic(tmp_path):
    argv = ["all", "--system", str(SYSTEMS / "shift2.ini")]
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main([*argv, "--out", str(a)])
    main([*argv, "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_all_records_unsupported_constructions_as_skipped(tmp_path):
    code, doc = run_json(tmp_path, "all", "--system", str(SYSTEMS / "shift2_flip.ini"))
    skipped = [r["title"] for r in doc["reports"] if r["data"].get("skipped")]
    assert skipped and all(t.endswith("skipped") for t in skipped)
    assert doc["exit"] == code


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "semicross", "classes", "--system", str(SYSTEMS / "finite6.ini")],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["command"] == "classes"
