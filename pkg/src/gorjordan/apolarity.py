"""Catalecticants and Hilbert functions of ``A = S/Ann(F)`` and its derived algebras.

For a homogeneous ``F`` of degree ``d`` the pairing ``S_j x S_{d-j} -> Q``,
``(a, b) -> (ab) o F``, has matrix ``Cat_F(j)``; its rank is ``h_A(j)``.  The
derived algebra ``A^(i)`` is ``S/Ann(l^i o F)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .exact_linalg import RationalMatrix, int_rank, integer_rows, pivot_columns, solve
from .poly import (
    Exponent,
    LinearForm,
    Polynomial,
    Ring,
    apply_operator,
    linear_power_derivative,
    monomial_basis,
    monomial_factorial,
)


class HilbertFunction(tuple):
    """Vector ``(h_0, ..., h_d)`` of non-negative integers."""

    def __new__(cls, values=()):
        values = tuple(int(v) for v in values)
        if any(v < 0 for v in values):
            raise ValueError("Hilbert function values must be non-negative")
        return super().__new__(cls, values)

    @property
    def socle_degree(self) -> int:
        return len(self) - 1

    @property
    def dimension(self) -> int:
        return sum(self)

    def is_symmetric(self) -> bool:
        return tuple(self) == tuple(reversed(self))

    def __repr__(self) -> str:
        return f"HilbertFunction({tuple(self)})"


@dataclass(frozen=True)
class DualGenerator:
    """A non-zero homogeneous form ``F`` of the dual ring ``R``."""

    poly: Polynomial

    def __post_init__(self) -> None:
        F = self.poly
        if F.ring is not Ring.R:
            raise ValueError("a dual generator lives in the R ring (uppercase variables)")
        if F.is_zero:
            raise ValueError("a dual generator must be non-zero")
        if not F.is_homogeneous:
            raise ValueError("a dual generator must be homogeneous")

    @property
    def num_vars(self) -> int:
        return self.poly.num_vars

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __str__(self) -> str:
        return str(self.poly)


GeneratorLike = Union[DualGenerator, Polynomial]


def as_dual(F: GeneratorLike) -> DualGenerator:
    return F if isinstance(F, DualGenerator) else DualGenerator(F)


def _pairing_value(F: Polynomial, gamma: Exponent) -> Fraction:
    """``x^gamma o F`` for ``|gamma| = deg F``: a scalar."""
    c = F.coefficient(gamma)
    return c * monomial_factorial(gamma) if c else Fraction(0)


def _cat_rows(F: Polynomial, j: int) -> list[list[Fraction]]:
    d = F.degree
    rows_b = monomial_basis(F.num_vars, j)
    cols_b = monomial_basis(F.num_vars, d - j)
    return [
        [_pairing_value(F, tuple(a + b for a, b in zip(alpha, beta))) for beta in cols_b]
        for alpha in rows_b
    ]


def catalecticant(F: GeneratorLike, j: int) -> RationalMatrix:
    """``Cat_F(j)``: rows ``monomial_basis(n, j)``, columns ``monomial_basis(n, d-j)``."""
    F = as_dual(F).poly
    d = F.degree
    if not 0 <= j <= d:
        raise ValueError(f"degree {j} outside 0..{d}")
    rows = _cat_rows(F, j)
    return RationalMatrix.from_rows(rows, cols=len(monomial_basis(F.num_vars, d - j)))


@lru_cache(maxsize=4096)
def _hilbert(F: Polynomial) -> HilbertFunction:
    d = F.degree
    half = [int_rank(integer_rows(_cat_rows(F, j))) for j in range(d // 2 + 1)]
    # rank Cat_F(j) = rank Cat_F(d-j): the two matrices are transposes
    return HilbertFunction(half[min(j, d - j)] for j in range(d + 1))


def hilbert_function(F: GeneratorLike) -> HilbertFunction:
    """``h_A(j) = rank Cat_F(j)`` for ``0 <= j <= deg F``."""
    return _hilbert(as_dual(F).poly)


def derived_generator(F: GeneratorLike, ell: LinearForm, i: int) -> DualGenerator | None:
    """``l^i o F`` as a dual generator, or ``None`` when it vanishes."""
    F = as_dual(F).poly
    if i < 0:
        raise ValueError("i must be non-negative")
    G = linear_power_derivative(ell, i, F)
    return None if G.is_zero else DualGenerator(G)


def nilpotency_order(F: GeneratorLike, ell: LinearForm) -> int:
    """Least ``i`` with ``l^i o F = 0``."""
    G = as_dual(F).poly
    op = ell.to_polynomial()
    i = 0
    while not G.is_zero:
        G = apply_operator(op, G)
        i += 1
    return i


def derived_hilbert_functions(F: GeneratorLike, ell: LinearForm) -> list[HilbertFunction]:
    """``[h_{A^(0)}, h_{A^(1)}, ...]`` up to the last non-zero derived algebra."""
    G = as_dual(F).poly
    op = ell.to_polynomial()
    out = []
    while not G.is_zero:
        out.append(_hilbert(G))
        G = apply_operator(op, G)
    return out


def algebra_dimension(F: GeneratorLike) -> int:
    return hilbert_function(F).dimension


def _power_terms(ell: LinearForm, k: int) -> dict[Exponent, Fraction]:
    return dict((ell.to_polynomial() ** k).terms)


def mixed_hessian_rank(F: GeneratorLike, ell: LinearForm, i: int, j: int) -> int:
    """Rank of ``x l^(j-i): A_i -> A_j`` through the pairing ``(a b l^(j-i)) o F``.

    Rows run over all monomials of degree ``i``, columns over all monomials of
    degree ``d - j``; the power of ``l`` is expanded explicitly so this path
    never forms ``l^(j-i) o F``.
    """
    F = as_dual(F).poly
    d = F.degree
    if not 0 <= i <= j <= d:
        raise ValueError(f"need 0 <= i <= j <= {d}, got i={i}, j={j}")
    n = F.num_vars
    if ell.num_vars != n:
        raise ValueError("linear form and generator have different numbers of variables")
    power = _power_terms(ell, j - i)
    rows_b = monomial_basis(n, i)
    cols_b = monomial_basis(n, d - j)
    rows = []
    for alpha in rows_b:
        row = []
        for beta in cols_b:
            ab = tuple(a + b for a, b in zip(alpha, beta))
            total = Fraction(0)
            for gamma, c in power.items():
                total += c * _pairing_value(F, tuple(x + g for x, g in zip(ab, gamma)))
            row.append(total)
        rows.append(row)
    return int_rank(integer_rows(rows))


def _dual_vectors(G: Polynomial, monomials, target_degree: int) -> list[list[Fraction]]:
    """Coefficient vectors of ``m o G`` over ``monomial_basis(n, target_degree)``."""
    basis = monomial_basis(G.num_vars, target_degree)
    out = []
    for m in monomials:
        image = apply_operator(Polynomial.monomial(m, 1, Ring.S), G)
        out.append([image.coefficient(b) for b in basis])
    return out


def algebra_basis(F: GeneratorLike) -> list[list[Exponent]]:
    """Per degree ``j``, monomials whose classes form a basis of ``A_j``.

    They are the pivot rows of ``Cat_F(j)``, taken in graded-lex order.
    """
    F = as_dual(F).poly
    d = F.degree
    out = []
    for j in range(d + 1):
        rows_b = monomial_basis(F.num_vars, j)
        transposed = list(map(list, zip(*_cat_rows(F, j))))
        out.append([rows_b[c] for c in pivot_columns(transposed)])
    return out


def multiplication_matrix(F: GeneratorLike, ell: LinearForm) -> RationalMatrix:
    """Matrix of multiplication by ``l`` on ``A`` in the basis of :func:`algebra_basis`.

    Column ``m`` holds the coordinates of ``l*m`` in the next degree's basis,
    found by solving ``(l m) o F = sum_b c_b (b o F)`` exactly.
    """
    F = as_dual(F).poly
    d = F.degree
    if ell.num_vars != F.num_vars:
        raise ValueError("linear form and generator have different numbers of variables")
    basis = algebra_basis(F)
    offsets = [0]
    for block in basis:
        offsets.append(offsets[-1] + len(block))
    size = offsets[-1]
    entries = [[Fraction(0)] * size for _ in range(size)]
    if ell.is_zero:
        return RationalMatrix.from_rows(entries, cols=size)
    op = ell.to_polynomial()
    lF = apply_operator(op, F)
    for j in range(d):
        if lF.is_zero:
            break
        source = basis[j]
        target = basis[j + 1]
        # (l m) o F = m o (l o F), a form of degree d - j - 1
        images = _dual_vectors(lF, source, d - j - 1)
        columns = _dual_vectors(F, target, d - j - 1)
        a = RationalMatrix.from_rows(list(map(list, zip(*columns))), cols=len(target))
        b = RationalMatrix.from_rows(list(map(list, zip(*images))), cols=len(source))
        coords = solve(a, b)
        for col, _ in enumerate(source):
            for row in range(len(target)):
                entries[offsets[j + 1] + row][offsets[j] + col] = coords[row, col]
    return RationalMatrix.from_rows(entries, cols=size)
