import json
import subprocess
import sys

import pytest

from negcurves import jsonio
from negcurves.cli import main, rational
from negcurves.mds import Status


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pell(capsys):
    code, out, _ = run(capsys, "pell", "--k", "5", "--count", "6")
    assert code == 0
    assert "(3, 8)" in out and "(8, 3)" in out


def test_pell_json(capsys):
    code, out, _ = run(capsys, "pell", "--k", "3", "--count", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["type"] == "pell_chain" and doc["K"] == 3
    assert len(jsonio.decode(doc)) == 3


def test_triangle(capsys, tmp_path):
    svg, tikz = tmp_path / "t.svg", tmp_path / "t.tex"
    code, out, _ = run(capsys, "triangle", "--family", "rt", "--k", "4", "--mn", "2,1",
                       "--svg", str(svg), "--tikz", str(tikz))
    assert code == 0
    assert "b = 5/4" in out and "lattice points: 4" in out
    assert svg.read_text().startswith("<?xml") and "tikzpicture" in tikz.read_text()


def test_curve(capsys):
    code, out, _ = run(capsys, "curve", "--family", "rt", "--k", "4", "--n", "1")
    assert code == 0
    assert out.splitlines()[0] == "1 + x - 3*x*y + x^2*y^3"
    assert "C.C = -1/4" in out and "methods agree" in out


@pytest.mark.parametrize("method", ["recurrence", "solver"])
def test_curve_json(capsys, method):
    code, out, _ = run(capsys, "curve", "--family", "it", "--k", "5", "--n", "1", "--method", method, "--json")
    doc = json.loads(out)
    assert code == 0 and doc["method"] == method and doc["self_intersection"] == "-1"
    assert "methods_agree" not in doc


def test_mds(capsys):
    code, out, _ = run(capsys, "mds", "--family", "it", "--k", "4", "--n", "1", "--alpha", "0", "--beta", "1/4")
    assert code == 0 and "verdict: MDS" in out and "witness:" in out
    code, out, _ = run(capsys, "mds", "--family", "rt", "--k", "4", "--n", "1", "--alpha", "1/24",
                       "--beta", "1/24", "--json")
    t, v = jsonio.decode(json.loads(out))
    assert v.status is Status.NON_MDS and v.witness is None


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--m", "4")
    assert code == 0
    assert "2 curve classes" in out and "IT(3,1) K=5" in out and "RT(4,3) K=4" in out
    code, out, _ = run(capsys, "search", "--m", "3", "--json")
    assert len(json.loads(out)["classes"]) == 2


@pytest.mark.parametrize("argv", [
    ["mds", "--family", "it", "--k", "4", "--n", "1", "--alpha", "0.5", "--beta", "0"],
    ["mds", "--family", "it", "--k", "4", "--n", "1", "--alpha", "0"],
    ["curve", "--family", "it", "--k", "4"],
    ["curve", "--family", "it", "--k", "4", "--mn", "2,2"],
    ["curve", "--family", "xx", "--k", "4", "--n", "1"],
    ["mds", "--family", "it", "--k", "4", "--n", "1", "--alpha", "1", "--beta", "1"],
    ["nosuch"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_rational_type():
    assert rational("3/4") == rational(" 6/8 ")
    assert rational("-2") == -2
    for bad in ("0.5", "1e3", "1/2/3", "a"):
        with pytest.raises(Exception):
            rational(bad)


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-m", "12", "--max-k", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == f"{len(lines) - 1}/{len(lines) - 1} checks passed"
    assert all(line.startswith("[PASS]") for line in lines[:-1])


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "negcurves", "pell", "--k", "3", "--count", "3"],
                       capture_output=True, text=True, timeout=60)
    assert r.returncode == 0 and "(1, 1)" in r.stdout


def test_disagreement_exit_code(capsys, monkeypatch):
    from negcurves import cli
    from negcurves.laurent import parse

    monkeypatch.setattr(cli, "xi_family", lambda kind, s: parse("1 - x*y") ** 2)
    code, out, _ = run(capsys, "curve", "--family", "rt", "--k", "4", "--n", "1")
    assert code == 1 and "METHODS DISAGREE" in out
