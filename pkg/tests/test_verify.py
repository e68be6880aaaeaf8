import pytest

from bicalc.verify import SUITES, run_suites


@pytest.mark.parametrize("suite", [s for s in SUITES if s not in ("genfun", "algebra")])
def test_suite_passes(suite):
    (res,) = run_suites([suite])
    failed = [c.name for c in res.checks if not c.passed]
    assert res.passed, failed
    assert res.checks


def test_max_degree_is_respected():
    (res,) = run_suites(["appell"], max_degree=2)
    assert all("<= 2" in c.name for c in res.checks)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suites(["nope"])


def test_second_kind_report_records_sign_disagreement():
    (res,) = run_suites(["second-kind"])
    entry = next(e for e in res.extra["discrepancy_report"] if e["order"] == [0, 0, 0, 1])
    assert entry["equal"] is False
    assert res.to_json()["discrepancy_report"]
