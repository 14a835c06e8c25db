import json

import pytest

from gorjordan.search import (
    REALIZED,
    UNREALIZED,
    SearchVerdict,
    attempt_realization,
    candidate_key,
    enumerate_candidates,
    read_log,
    run_search,
    verify_verdict,
)
from gorjordan.sequences import check_rank_matrix_conditions

from test_jordan import EXAMPLE_M
from test_sequences import COUNTER_N


def test_d2_candidates():
    cands = list(enumerate_candidates(2))
    assert ((1, 1, 1), (0, 1, 1), (0, 0, 1)) in cands
    assert ((1, 0, 0), (0, 3, 0), (0, 0, 1)) in cands
    assert len(cands) == len(set(cands))
    assert all(check_rank_matrix_conditions(c).passed for c in cands)


def test_candidates_symmetric_by_default():
    for c in enumerate_candidates(4):
        n = len(c)
        for k in range(n):
            dg = [c[i][i + k] for i in range(n - k)]
            assert dg == dg[::-1]


def test_asymmetric_enumeration_is_superset():
    sym = set(enumerate_candidates(3))
    full = set(enumerate_candidates(3, symmetric_diagonals=False))
    assert sym < full


def test_enumeration_limits():
    with pytest.raises(ValueError):
        list(enumerate_candidates(12))
    assert all(max(max(r) for r in c) <= 2 for c in enumerate_candidates(4, max_entry=2))


def test_realize_example_matrix():
    v = attempt_realization(EXAMPLE_M, budget=300, seed=1)
    assert v.status == REALIZED
    assert verify_verdict(v)


def test_rejects_failing_candidate():
    v = attempt_realization(COUNTER_N, budget=50)
    assert v.status == UNREALIZED and v.attempts == 0
    assert "(iii)" in v.note


def test_attempts_are_deterministic():
    cand = ((1, 1, 1, 0), (0, 2, 2, 1), (0, 0, 2, 1), (0, 0, 0, 1))
    a = attempt_realization(cand, budget=60, seed=5)
    b = attempt_realization(cand, budget=60, seed=5)
    assert a == b
    assert a.key == candidate_key(cand)


def test_verdict_round_trip():
    v = attempt_realization(((1, 1, 1), (0, 1, 1), (0, 0, 1)), budget=20)
    w = SearchVerdict.from_json(json.loads(v.to_line()))
    assert w == v
    assert v.status == REALIZED and verify_verdict(v)


def test_verify_verdict_catches_wrong_witness():
    v = attempt_realization(((1, 1, 1), (0, 1, 1), (0, 0, 1)), budget=20)
    v.witness = "Y^2"
    assert not verify_verdict(v)


def test_run_search_and_resume(tmp_path):
    out = tmp_path / "log.ndjson"
    summary = run_search(3, 100, 0, out, workers=1)
    lines = out.read_text().splitlines()
    assert summary["total"] == len(lines) > 0
    assert summary["counts"].get(REALIZED) == summary["total"]
    assert all(verify_verdict(v) for v in read_log(out))
    # drop the tail and resume: the log is completed without duplicates
    out.write_text("\n".join(lines[: len(lines) // 2]) + "\n")
    again = run_search(3, 100, 0, out, resume=True, workers=1)
    assert again["total"] == summary["total"]
    assert sorted(out.read_text().splitlines()) == sorted(lines)


def test_run_search_overwrites_without_resume(tmp_path):
    out = tmp_path / "log.ndjson"
    out.write_text("garbage\n")
    run_search(2, 20, 0, out, workers=1)
    assert all(json.loads(line) for line in out.read_text().splitlines())
