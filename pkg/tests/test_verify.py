import json

import pytest

from fockyangian import mutations
from fockyangian.verify import (
    DAHA_IDS, RelationCheck, finite_relation_checks, multi_vector_from_json, multi_vector_json,
    profile_checks, run_check, run_checks, summarize, symbolic_nu,
)
from fockyangian.combinatorics import ChargedMultipartition
from fockyangian.coeff import C, T


def test_examples_from_the_relation_list():
    for sign in ("+", "-"):
        rc = RelationCheck("Y3", nodes=(1, 1), modes=(0, 0), sign=sign, max_boxes=1)
        assert run_check(rc)["status"] == "pass"
    assert run_check(RelationCheck("Y12", nodes=(1, 2), modes=(0, 0, 0), sign="+", max_boxes=3))["status"] == "pass"
    assert run_check(RelationCheck("Y6", nodes=(1, 0), modes=(0, 0), mode="sampled"))["status"] == "pass"


def test_report_is_deterministic_without_timing():
    checks = finite_relation_checks(3, 2, (-1, 1), 1)[:20] + [
        RelationCheck("H4", L=2, charges=(), max_boxes=2, level=1, nu=symbolic_nu(2))
    ]
    a = json.dumps(run_checks(checks, timing=False), sort_keys=True)
    b = json.dumps(run_checks(checks, timing=False), sort_keys=True)
    assert a == b
    assert all(r["millis"] is None for r in json.loads(a))


def test_timing_is_reported():
    rep = run_check(RelationCheck("Y1", nodes=(1, 2), modes=(1, 1), max_boxes=1))
    assert isinstance(rep["millis"], int)
    assert set(rep) == {"id", "params", "status", "millis"}


def test_relation_check_json_round_trip():
    checks = [
        RelationCheck("Y5", N=4, L=2, charges=(0, 1), nodes=(1, 2), modes=(1, 0), sign="-", mode="sampled"),
        RelationCheck("H2", L=2, charges=(), max_boxes=3, level=2, nu=(T / 3 + 1, C)),
        RelationCheck("DEG", N=3, L=2, charges=(-1, 1), level=2),
    ]
    for rc in checks:
        assert RelationCheck.from_json(json.loads(json.dumps(rc.to_json()))) == rc


def test_relation_check_validation():
    with pytest.raises(ValueError):
        RelationCheck("Y99")
    with pytest.raises(ValueError):
        RelationCheck("Y1", L=2, charges=(0,))
    with pytest.raises(ValueError):
        RelationCheck("Y1", mode="numeric")


def test_empty_window_passes():
    checks = finite_relation_checks(3, 1, (0,), 0) + finite_relation_checks(3, 2, (-1, 1), 0)
    reports = run_checks(checks, timing=False)
    assert summarize(reports)["status"] == "pass"


def test_counterexample_is_reported():
    with mutations.seeded("omega_H_square_dropped"):
        rep = run_check(RelationCheck("Y4", nodes=(1, 1), modes=(1, 0), sign="+", max_boxes=2), timing=False)
    assert rep["status"] == "fail"
    assert "counterexample" in rep


def test_error_status():
    with mutations.seeded("T_mod_NL"):
        rep = run_check(RelationCheck("TINF", N=3, L=2, charges=(-1, 1), max_boxes=2), timing=False)
    assert rep["status"] == "error"
    assert "ArithmeticError" in rep["counterexample"]["reason"]


def test_vector_json_round_trip():
    vec = {
        ChargedMultipartition(((1,), ()), (-1, 1)): T / 2,
        ChargedMultipartition(((), (2, 1)), (-1, 1)): 3,
    }
    rows = multi_vector_json(vec)
    reversed_vec = dict(reversed(list(vec.items())))
    assert multi_vector_json(reversed_vec) == rows
    assert multi_vector_from_json(json.loads(json.dumps(rows))) == vec


def test_parallel_runs_match_serial():
    checks = finite_relation_checks(3, 1, (0,), 1)[:12] + finite_relation_checks(3, 2, (-1, 1), 1)[:12]
    assert run_checks(checks, jobs=2, timing=False) == run_checks(checks, jobs=1, timing=False)


def test_profiles():
    quick = profile_checks("quick")
    full = profile_checks("full")
    assert len(full) > len(quick)
    ids = {rc.id for rc in quick}
    for rid in ("Y1", "Y6", "Y11", "Y12", "DD", "STAB", "DEG", "KEY", "CYC", "LEVEL", "CELLX", "TINF", "BIJ") + DAHA_IDS:
        assert rid in ids
    with pytest.raises(ValueError):
        profile_checks("huge")
