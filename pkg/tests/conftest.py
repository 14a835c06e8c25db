from __future__ import annotations

import random
from fractions import Fraction

import pytest

from gorjordan import LinearForm, Polynomial, monomial_basis, parse_linear_form, parse_polynomial

EXAMPLE_F = "X1^2*X2^2*X3^2"
FINAL_F = "X^3*Y^4+X^3*Z^4+X^2*Y*Z^4+Y^3*Z^4"


def random_form(rng: random.Random, d: int, n: int = 3, terms: int | None = None, x_cap: int | None = None) -> Polynomial:
    """Non-zero degree-d form with small integer coefficients.

    ``x_cap`` bounds the exponent of the first variable, which bounds the
    nilpotency order of ``x1`` on the algebra.
    """
    pool = [e for e in monomial_basis(n, d) if x_cap is None or e[0] <= x_cap]
    if terms is None:
        terms = rng.randint(1, min(len(pool), 8))
    chosen = rng.sample(pool, min(terms, len(pool)))
    coeffs = {}
    for e in chosen:
        c = 0
        while c == 0:
            c = rng.randint(-5, 5)
        coeffs[e] = Fraction(c)
    if x_cap is not None and not any(e[0] == x_cap for e in chosen):
        top = [e for e in pool if e[0] == x_cap]
        coeffs[rng.choice(top)] = Fraction(1)
    return Polynomial(n, coeffs)


def random_linear(rng: random.Random, n: int = 3) -> LinearForm:
    return LinearForm(tuple(rng.randint(-2, 2) for _ in range(n)))


def random_cases(count: int, seed: int, max_degree: int = 8):
    """Reproducible (F, l) pairs; about a third use l = x1 with a capped X1-degree."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        d = rng.randint(2, max_degree)
        if k % 3 == 0:
            cap = rng.randint(0, min(d, 4))
            out.append((random_form(rng, d, x_cap=cap), LinearForm.variable(0, 3)))
        else:
            out.append((random_form(rng, d), random_linear(rng)))
    return out


@pytest.fixture
def example():
    return parse_polynomial(EXAMPLE_F, 3), parse_linear_form("x1", 3)


@pytest.fixture
def final_example():
    return parse_polynomial(FINAL_F, 3), parse_linear_form("x", 3)
