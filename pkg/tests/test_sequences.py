from itertools import product

import pytest

from gorjordan import check_rank_matrix_conditions, is_o_sequence, macaulay_growth_bound, rank_matrix
from gorjordan.jordan import InvalidRankMatrixError, jdt_from_rank
from gorjordan.sequences import lex_segment_is_o_sequence, macaulay_representation

from conftest import random_cases

COUNTER_M = [
    [1, 1, 1, 0, 0, 0],
    [0, 3, 2, 2, 0, 0],
    [0, 0, 3, 3, 2, 0],
    [0, 0, 0, 3, 2, 1],
    [0, 0, 0, 0, 3, 1],
    [0, 0, 0, 0, 0, 1],
]
COUNTER_N = [
    [1, 1, 1, 0, 0, 0],
    [0, 3, 3, 1, 0, 0],
    [0, 0, 5, 4, 1, 0],
    [0, 0, 0, 5, 3, 1],
    [0, 0, 0, 0, 3, 1],
    [0, 0, 0, 0, 0, 1],
]


def test_growth_bound_values():
    assert macaulay_growth_bound(3, 1) == 6
    assert macaulay_growth_bound(0, 4) == 0
    # 7 = C(4,3) + C(3,2), so the bound is C(5,4) + C(4,3)
    assert macaulay_representation(7, 3) == [(4, 3), (3, 2)]
    assert macaulay_growth_bound(7, 3) == 9
    assert macaulay_growth_bound(1, 5) == 1


def test_growth_bound_against_lex_segments():
    # the bound is the largest value the lex-segment check accepts next
    from math import comb

    for h in range(0, 8):
        best = max(v for v in range(0, 40) if lex_segment_is_o_sequence([1, h, v]))
        assert best == macaulay_growth_bound(h, 1)
    for i in range(2, 5):
        full = [comb(k + 2, 2) for k in range(i)]  # all of k[x, y, z] below degree i
        for h in range(0, comb(i + 2, 2) + 1):
            best = max(v for v in range(0, 60) if lex_segment_is_o_sequence(full + [h, v]))
            assert best == macaulay_growth_bound(h, i), (i, h)


def test_o_sequence_examples():
    assert is_o_sequence([1, 3, 6, 7, 6, 3, 1])
    r = is_o_sequence([1, 2, 1, 0, 1, 0])
    assert not r and r.index == 4
    r = is_o_sequence([1, 3, 7])
    assert not r and r.index == 2
    assert not is_o_sequence([2, 1]) and is_o_sequence([2, 1]).index == 0
    assert is_o_sequence([0, 0, 0])
    assert not is_o_sequence([1, -1])


def test_lex_oracle_small_exhaustive():
    for length in range(1, 4):
        for v in product(range(7), repeat=length):
            assert bool(is_o_sequence(v)) == lex_segment_is_o_sequence(v), v


def test_counterexample_m_fails_condition_ii():
    report = check_rank_matrix_conditions(COUNTER_M)
    assert not report.passed
    ii = report.failed("ii")
    assert ii and ii[0].location["vector"] == [1, 2, 1, 0, 1, 0]
    assert ii[0].location["index"] == 4


def test_counterexample_n_fails_condition_iii():
    report = check_rank_matrix_conditions(COUNTER_N)
    iii = report.failed("iii")
    hit = [v for v in iii if (v.location["i"], v.location["j"]) == (1, 2)]
    assert hit and hit[0].location["submatrix"] == [[3, 1], [5, 4]]
    assert not report.failed("i") and not report.failed("ii")


def test_genuine_example_passes(example):
    report = check_rank_matrix_conditions(rank_matrix(*example))
    assert report.passed and not report.warnings


def test_asymmetric_diagonal_only_warns():
    M = [[1, 1, 0, 0], [0, 2, 1, 0], [0, 0, 2, 0], [0, 0, 0, 1]]
    report = check_rank_matrix_conditions(M)
    assert report.passed
    assert report.warnings


@pytest.mark.parametrize(
    "bad", [[[1, 0], [1, 1]], [[1, 0], [0]], [[1, -1], [0, 1]], [], [["a"]]]
)
def test_malformed_shapes(bad):
    with pytest.raises(ValueError):
        check_rank_matrix_conditions(bad)


@pytest.mark.parametrize("case", range(40))
def test_genuine_matrices_pass_and_iii_matches_jdt(case):
    F, ell = random_cases(40, 3)[case]
    M = rank_matrix(F, ell)
    assert check_rank_matrix_conditions(M).passed
    jdt_from_rank(M)


def test_iii_equivalent_to_nonnegative_jdt():
    # all 3x3 upper-triangular 0/1/2 matrices passing (i) and (ii)
    for vals in product(range(3), repeat=6):
        M = [[vals[0], vals[1], vals[2]], [0, vals[3], vals[4]], [0, 0, vals[5]]]
        report = check_rank_matrix_conditions(M)
        if report.failed("i") or report.failed("ii"):
            continue
        try:
            jdt_from_rank(M)
            ok = True
        except InvalidRankMatrixError:
            ok = False
        assert ok == (not report.failed("iii")), M
