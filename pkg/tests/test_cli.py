import csv
import json
import subprocess
import sys
from math import factorial

import pytest

from bicalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), (json.loads(err) if err.strip() else None)


def test_eval_exact(capsys):
    code, out, _ = run(capsys, "eval", "--expr", "Z Zs", "--at", "1+1j", "--mode", "exact")
    assert code == 0
    assert out["value"]["text"] == "2"
    assert out["value"]["cartesian"] == [2, 0, 0, 0]


def test_eval_mode_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BICALC_MODE", "exact")
    _, out, _ = run(capsys, "eval", "--expr", "1/3 Z", "--at", "1")
    assert out["mode"] == "exact" and out["value"]["cartesian"][0] == "1/3"
    monkeypatch.setenv("BICALC_MODE", "float")
    _, out, _ = run(capsys, "eval", "--expr", "1/3 Z", "--at", "1")
    assert out["mode"] == "float" and out["value"]["cartesian"][0] == 1 / 3
    monkeypatch.delenv("BICALC_MODE")
    _, out, _ = run(capsys, "eval", "--expr", "Z", "--at", "1")
    assert out["mode"] == "float"


def test_diff(capsys):
    code, out, _ = run(capsys, "diff", "--expr", "Z Zb Zs Zd", "--wrt", "Z", "--mode", "exact")
    assert code == 0 and out["derivative"]["expr"] == "Zb Zs Zd"
    _, out, _ = run(capsys, "diff", "--expr", "Z^3", "--wrt", "Z", "--repeat", "2", "--mode", "exact")
    assert out["derivative"]["expr"] == "6 Z"


def test_hermite(capsys):
    _, out, _ = run(capsys, "hermite", "--kind", "first", "--variant", "bar", "--m", "2", "--n", "2", "--mode", "exact")
    assert out["polynomial"]["expr"] == "Z^2 Zb^2 - 4 Z Zb + 2"
    _, out, _ = run(capsys, "hermite", "--variant", "star", "--m", "1", "--n", "1", "--at", "1+1j", "--mode", "exact")
    assert out["value"]["text"] == "1"
    _, out, _ = run(capsys, "hermite", "--kind", "second", "--m", "0", "--n", "0", "--p", "0", "--q", "1", "--mode", "exact")
    assert out["polynomial"]["expr"] == "Z Zb Zs"
    assert out["closed_form"] == "-Z Zb Zs" and out["closed_form_equal"] is False
    _, out, _ = run(capsys, "hermite", "--kind", "second", "--m", "1", "--n", "0", "--p", "0", "--q", "0")
    assert out["closed_form"]["error"] == "ExponentUnderflow"
    code, _, err = run(capsys, "hermite", "--kind", "second", "--m", "0", "--n", "0")
    assert code == 2 and "--p" in err["message"]


def test_kernel(capsys):
    _, out, _ = run(capsys, "kernel", "--space", "fock", "--realm", "complex", "--order", "1", "--z", "0", "--w", "0")
    assert out["value"] == {"re": 1.0, "im": 0.0}
    _, out, _ = run(capsys, "kernel", "--space", "bergman", "--realm", "bicomplex", "--order", "2", "--z", "0", "--w", "0")
    assert out["value"]["idempotent"]["l1"][0] == pytest.approx(4 / 3.141592653589793)
    code, _, err = run(capsys, "kernel", "--space", "bergman", "--order", "1", "--z", "2", "--w", "0")
    assert code == 2 and err["error"] == "DomainViolation"
    code, _, err = run(capsys, "kernel", "--space", "fock", "--order", "1", "--z", "1j", "--w", "0")
    assert code == 2


def test_gram_csv(tmp_path, capsys):
    path = tmp_path / "gram.csv"
    code, out, _ = run(capsys, "gram", "--variant", "star", "--max-m", "2", "--max-n", "2", "--nodes", "16",
                       "--out", str(path))
    assert code == 0 and out["written"] == str(path)
    rows = list(csv.reader(path.open()))
    header, body = rows[0], rows[1:]
    assert header[:5] == ["pair", "(0,0)_e1", "(0,0)_e2", "(0,1)_e1", "(0,1)_e2"]
    assert len(body) == 9 and [r[0] for r in body][:4] == ["(0,0)", "(0,1)", "(1,0)", "(0,2)"]
    for i, r in enumerate(body):
        m, n = map(int, r[0].strip("()").split(","))
        assert complex(r[1 + 2 * i]) == pytest.approx(factorial(m) * factorial(n), rel=1e-12)
        assert complex(r[2 + 2 * i]) == pytest.approx(factorial(m) * factorial(n), rel=1e-12)


def test_gram_json(capsys):
    _, out, _ = run(capsys, "gram", "--max-m", "1", "--max-n", "1", "--nodes", "8")
    assert out["pairs"] == [[0, 0], [0, 1], [1, 0], [1, 1]]
    assert out["e1"][3][3][0] == pytest.approx(1.0)


def test_decompose_and_multiorder(capsys):
    _, out, _ = run(capsys, "decompose", "--expr", "Z Zs - 1", "--mode", "exact")
    assert out["star_order"] == 2 and [c["expr"] for c in out["components"]] == ["-1", "Z"]
    code, _, err = run(capsys, "decompose", "--expr", "Zb")
    assert code == 2 and err["error"] == "NotStarPolyanalytic"
    _, out, _ = run(capsys, "multiorder", "--expr", "Zb Zd^3")
    assert out["multiorder"] == [2, 1, 4]


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "eval", "--expr", "Z^", "--at", "1")
    assert code == 2 and out is None
    assert err == {"error": "ParseError", "message": err["message"], "position": 2, "expected": ["integer"]}


def test_verify_report(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--suite", "landau", "second-kind", "--max-degree", "4",
                       "--report", str(path))
    assert code == 0 and out["passed"]
    assert json.loads(path.read_text()) == out
    assert [s["suite"] for s in out["suites"]] == ["landau", "second-kind"]
    sk = out["suites"][1]
    assert len(sk["discrepancy_report"]) == 81
    assert set(out) == {"version", "parameters", "passed", "suites"}


def test_verify_failure_exit_code(capsys):
    # an impossible tolerance must turn the numeric suite red
    code, out, _ = run(capsys, "verify", "--suite", "orthogonality", "--tol", "1e-30")
    assert code == 1 and out["passed"] is False


def test_verify_schema_is_stable(capsys):
    def shape(doc):
        return [(s["suite"], [c["name"] for c in s["checks"]]) for s in doc["suites"]]
    _, a, _ = run(capsys, "verify", "--suite", "algebra", "rodrigues", "--max-degree", "3")
    _, b, _ = run(capsys, "verify", "--suite", "algebra", "rodrigues", "--max-degree", "3")
    assert shape(a) == shape(b)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bicalc", "multiorder", "--expr", "Z^5"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["multiorder"] == [1, 1, 1]
