import pytest

from gorjordan import (
    DualGenerator,
    LinearForm,
    algebra_basis,
    catalecticant,
    derived_generator,
    hilbert_function,
    mixed_hessian_rank,
    multiplication_matrix,
    nilpotency_order,
    parse_linear_form,
    parse_polynomial,
    rank,
)
from gorjordan.apolarity import derived_hilbert_functions

from conftest import random_cases


def test_example_hilbert_functions(example):
    F, x1 = example
    hs = derived_hilbert_functions(F, x1)
    assert [tuple(h) for h in hs] == [(1, 3, 6, 7, 6, 3, 1), (1, 3, 5, 5, 3, 1), (1, 2, 3, 2, 1)]


def test_power_of_variable():
    assert tuple(hilbert_function(parse_polynomial("X1^4", 3))) == (1, 1, 1, 1, 1)


def test_catalecticant_shape_and_entries():
    F = parse_polynomial("X1^2*X2^2*X3^2", 3)
    c = catalecticant(F, 1)
    assert (c.rows, c.cols) == (3, 21)
    assert rank(c) == 3


def test_dual_generator_validation():
    with pytest.raises(ValueError):
        DualGenerator(parse_polynomial("X1^2 + X2", 3))
    with pytest.raises(ValueError):
        DualGenerator(parse_polynomial("x1^2", 3))
    with pytest.raises(ValueError):
        hilbert_function(parse_polynomial("0*X1", 3))


def test_zero_linear_form_kills_everything(example):
    F, _ = example
    zero = LinearForm.zero(3)
    assert derived_generator(F, zero, 1) is None
    assert nilpotency_order(F, zero) == 1
    assert multiplication_matrix(F, zero).is_zero()


def test_algebra_basis_degree_one(example):
    F, _ = example
    basis = algebra_basis(F)
    assert basis[1] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(basis[6]) == 1


def test_multiplication_matrix_ranks(example):
    F, x1 = example
    T = multiplication_matrix(F, x1)
    assert T.rows == 27
    assert rank(T) == 18
    assert rank(T @ T) == 9
    assert (T @ T @ T).is_zero()


def test_single_block_for_pure_power():
    F = parse_polynomial("X1^5", 3)
    T = multiplication_matrix(F, parse_linear_form("x1", 3))
    ranks = []
    P = T
    for _ in range(6):
        ranks.append(rank(P))
        P = P @ T
    assert ranks == [5, 4, 3, 2, 1, 0]


def test_final_example_hessians(final_example):
    F, x = final_example
    assert tuple(hilbert_function(F)) == (1, 3, 6, 9, 9, 6, 3, 1)
    assert mixed_hessian_rank(F, x, 2, 5) == 2
    assert mixed_hessian_rank(F, x, 2, 4) == 4
    assert mixed_hessian_rank(F, x, 3, 4) == 7


@pytest.mark.parametrize("case", range(40))
def test_symmetry_and_hessian_agree_with_derived(case):
    F, ell = random_cases(40, 11)[case]
    h = hilbert_function(F)
    d = F.degree
    assert h.is_symmetric() and h[0] == h[d] == 1
    for j in range(d + 1):
        assert rank(catalecticant(F, j)) == rank(catalecticant(F, d - j))
    for i in range(d + 1):
        for j in range(i, d + 1):
            G = derived_generator(F, ell, j - i)
            want = hilbert_function(G)[i] if G is not None else 0
            assert mixed_hessian_rank(F, ell, i, j) == want


@pytest.mark.parametrize("case", range(15))
def test_multiplication_matrix_power_ranks(case):
    F, ell = random_cases(15, 5, max_degree=6)[case]
    T = multiplication_matrix(F, ell)
    hs = derived_hilbert_functions(F, ell)
    P = T
    for k in range(1, F.degree + 2):
        want = hs[k].dimension if k < len(hs) else 0
        assert rank(P) == want
        P = P @ T
