from __future__ import annotations

import json
import subprocess
import sys

import pytest

from clustersieve.cli import main
from clustersieve.cspcheck import CSPReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--family", "A", "--s", "2", "--n", "3", "--k", "2", "--threads", "1")
    assert code == 0
    assert "residues mod q^8-1: 2 1 2 1 2 1 2 1" in out
    assert "orbits: 8(1), 4(1)" in out
    assert "verdict: pass" in out


def test_verify_json_round_trips(capsys):
    code, out, _ = run(capsys, "verify", "--family", "D", "--s", "3", "--n", "2", "--k", "2", "--format", "json")
    assert code == 0
    rep = CSPReport.from_json(out)
    assert rep.passed and str(rep.orbits) == "4(4)"
    assert rep.to_json() + "\n" == out


def test_verify_is_deterministic(capsys):
    argv = ("verify", "--family", "I2", "--s", "2", "--a", "5", "--k", "2", "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv, "--threads", "2")
    assert first == second


def test_verify_trees_and_types(capsys):
    assert run(capsys, "verify", "--trees", "4")[0] == 0
    code, out, _ = run(capsys, "verify", "--type", "H3")
    assert code == 0 and "verdict: pass" in out


def test_enumerate(capsys, tmp_path):
    path = tmp_path / "faces.json"
    code, _, _ = run(capsys, "enumerate", "--family", "B", "--n", "3", "--k", "1", "--format", "json", "--output", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["count"] == 12 and len(data["faces"]) == 12


def test_orbits(capsys):
    code, out, _ = run(capsys, "orbits", "--type", "F4", "--k", "2")
    assert code == 0 and "7(19)" in out
    code, out, _ = run(capsys, "orbits", "--family", "B", "--n", "3", "--k", "1")
    assert "4(3)" in out


def test_bijection_image_and_face(capsys):
    code, out, _ = run(capsys, "bijection", "--kind", "A", "--s", "2", "--n", "11", "--d", "3", "--image", "3,8:0,1,1")
    assert code == 0 and "round trip ok" in out
    face = out.split()[0]
    code, out, _ = run(capsys, "bijection", "--kind", "A", "--s", "2", "--n", "11", "--d", "3", "--face", face)
    assert code == 0 and "mu=3,8 nu=011" in out


def test_bijection_all_fixed(capsys):
    code, out, _ = run(capsys, "bijection", "--kind", "D1", "--s", "3", "--n", "6", "--d", "4", "--k", "2")
    assert code == 0 and "all round trips ok" in out


def test_evaluate(capsys):
    code, out, _ = run(capsys, "evaluate", "--family", "D", "--s", "1", "--n", "6", "--k", "2", "--d", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["values"] == [{"d": 4, "cyclotomic": 6, "closed_form": 6}]


def test_catalan(capsys):
    code, out, _ = run(capsys, "catalan", "--type", "H3")
    assert code == 0
    assert "6+5q^2+5q^4+6q^6+5q^8+5q^{10}" in out


def test_table13_single_type(capsys):
    code, out, _ = run(capsys, "table13", "--type", "F4")
    assert code == 0 and out.count("[pass]") == 4


def test_table13_reports_misprint(capsys):
    code, out, err = run(capsys, "table13", "--type", "E7")
    assert code == 1
    assert "E7 k=2: 10(94), 5(1)  [FAIL] tabulated 10(97), 5(1)" in out
    assert "check-failed" in err


@pytest.mark.parametrize("argv", [
    ("verify", "--family", "A", "--n", "3", "--k", "7"),
    ("verify", "--family", "B", "--n", "1", "--k", "1"),
    ("verify", "--family", "A", "--s", "0", "--n", "3", "--k", "1"),
    ("verify", "--type", "E6", "--s", "2"),
    ("verify", "--type", "G2"),
    ("enumerate", "--family", "A", "--k", "1"),
    ("evaluate", "--family", "A", "--n", "3", "--s", "2", "--k", "1", "--d", "3"),
    ("bijection", "--kind", "B", "--n", "3", "--d", "3", "--k", "1"),
    ("bijection", "--kind", "A", "--s", "2", "--n", "3", "--d", "2", "--image", "x:y"),
    ("table13", "--type", "A3"),
])
def test_invalid_parameters(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error: invalid-parameter:")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "clustersieve", "catalan", "--type", "F4"],
                          capture_output=True, text=True, check=True)
    assert "15+15q^2" in proc.stdout
