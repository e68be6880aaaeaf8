"""Acceptance criteria 1-8, each at its stated tolerance.

Every criterion prints one ``CRITERION n: PASS|FAIL`` line.  Run directly
with ``python3 tests/test_acceptance.py`` or through pytest, where the lines
are repeated in the terminal summary.
"""
import json
import random
import subprocess
import sys
import time

import pytest

from bicalc import ParseError, format_expr, parse_expr
from bicalc.sampling import random_polynomial
from bicalc.verify import run_suites

RESULTS = {}


def record(n, title, ok, detail=""):
    line = f"CRITERION {n}: {'PASS' if ok else 'FAIL'}  {title}" + (f"  [{detail}]" if detail else "")
    RESULTS[n] = line
    print(line)
    return ok


def _suites(names, **kw):
    t0 = time.perf_counter()
    res = run_suites(names, **kw)
    dt = time.perf_counter() - t0
    bad = [f"{r.suite}: {c.name} {c.detail}".strip() for r in res for c in r.checks if not c.passed]
    return res, dt, bad


def _details(res):
    return "; ".join(c.detail for r in res for c in r.checks if c.detail)


def test_criterion_1_algebra():
    res, dt, bad = _suites(["algebra"])
    ok = not bad and dt < 1.0
    assert record(1, "algebra suite, exact product table on 1000 pairs plus exact identities, runtime < 1 s", ok,
                  f"{dt:.2f} s; {_details(res)}" + (f"; failed: {bad}" if bad else "")), bad


def test_criterion_2_calculus():
    res, dt, bad = _suites(["calculus"], max_degree=6)
    assert record(2, "calculus suite, degree <= 6, finite differences rel <= 1e-6", not bad,
                  _details(res) + (f"; failed: {bad}" if bad else "")), bad


def test_criterion_3_hermite_identities():
    t0 = time.perf_counter()
    res_a, _, bad_a = _suites(["appell"], max_degree=10)
    res_r, _, bad_r = _suites(["rodrigues", "landau"], max_degree=8)
    dt = time.perf_counter() - t0
    bad = bad_a + bad_r
    ok = not bad and dt < 10.0
    assert record(3, "Hermite identities (Appell m,n <= 10; Rodrigues/Landau m,n <= 8), runtime < 10 s",
                  ok, f"{dt:.2f} s" + (f"; failed: {bad}" if bad else "")), bad


def test_criterion_4_generating_function():
    res, dt, bad = _suites(["genfun"])
    assert record(4, "generating sums M=25 vs exp <= 1e-10; V=U* hyperbolic <= 1e-12", not bad,
                  _details(res) + (f"; failed: {bad}" if bad else "")), bad


def test_criterion_5_orthogonality():
    res, dt, bad = _suites(["orthogonality"], max_degree=4)
    ok = not bad and dt < 30.0
    assert record(5, "split Gram matrix (m,n) <= 4 at N=32, runtime < 30 s", ok,
                  f"{dt:.2f} s; {_details(res)}" + (f"; failed: {bad}" if bad else "")), bad


def test_criterion_6_kernels():
    res, dt, bad = _suites(["kernels"])
    assert record(6, "kernel formulas, split identities <= 1e-12, reproducing properties <= 1e-6", not bad,
                  _details(res) + (f"; failed: {bad}" if bad else "")), bad


def test_criterion_7_second_kind():
    res, dt, bad = _suites(["second-kind"])
    report = res[0].extra["discrepancy_report"]
    entry = next(e for e in report if e["order"] == [0, 0, 0, 1])
    ok = not bad and entry["equal"] is False and len(report) == 81
    assert record(7, "second kind: Rodrigues values exact, report records the (0,0,0,1) sign disagreement", ok,
                  f"{res[0].extra['agreements']}/81 orders agree" + (f"; failed: {bad}" if bad else "")), bad


MALFORMED = ["Z^", "", "Z +", "(Z", "Z)", "Z ^ x", "2i Z", "Q", "Z * * Z", "1/0", "((1+i) Z"]


def test_criterion_8_parser_and_cli():
    rng = random.Random(8)
    polys = [random_polynomial(rng, max_degree=6, n_terms=rng.randint(0, 8)) for _ in range(500)]
    round_trip = all(parse_expr(format_expr(P)) == P for P in polys)
    positioned = True
    for text in MALFORMED:
        try:
            parse_expr(text)
            positioned = False
        except ParseError as exc:
            positioned &= isinstance(exc.position, int) and 0 <= exc.position <= len(text) and bool(exc.expected)
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "bicalc", "verify", "--suite", "all"],
                          capture_output=True, text=True, timeout=600)
    dt = time.perf_counter() - t0
    cli_ok = proc.returncode == 0 and json.loads(proc.stdout)["passed"] and dt < 120
    ok = round_trip and positioned and cli_ok
    assert record(8, "500-polynomial round trip; positioned ParseErrors; `verify --suite all` exit 0 < 2 min", ok,
                  f"round trip {round_trip}, positioned {positioned}, verify exit {proc.returncode} in {dt:.1f} s")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
