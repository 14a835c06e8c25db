"""Experimental search: which condition-passing matrices are rank matrices?

Candidates are upper-triangular matrices whose diagonals satisfy the
necessary conditions of :mod:`gorjordan.sequences`.  Each one is tried
against classification witnesses, then sparse monomial generators, then
random ones.  A miss after the budget is inconclusive, never a proof of
non-realizability.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .apolarity import DualGenerator
from .classify3 import (
    default_workers,
    valid_parameters_l2,
    valid_parameters_l3,
    witness_generator,
)
from .jordan import rank_matrix
from .poly import LinearForm, Polynomial, monomial_basis, monomial_factorial
from .sequences import check_rank_matrix_conditions, is_o_sequence

REALIZED = "realized"
UNREALIZED = "unrealized-after-budget"

DEFAULT_MAX_DEGREE = 9
X = LinearForm.variable(0, 3)
ZERO = LinearForm.zero(3)

Matrix = tuple[tuple[int, ...], ...]


def candidate_key(candidate: Sequence[Sequence[int]]) -> str:
    blob = json.dumps([list(r) for r in candidate], separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


# -- enumeration --------------------------------------------------------------


def _half_vectors(length: int, caps: Sequence[int], symmetric: bool) -> Iterator[tuple[int, ...]]:
    """All vectors ``v`` with ``0 <= v[i] <= caps[i]``, optionally palindromic, in lex order."""
    if not symmetric:
        yield from product(*(range(c + 1) for c in caps))
        return
    free = (length + 1) // 2
    mirrored_caps = [min(caps[i], caps[length - 1 - i]) for i in range(free)]
    for half in product(*(range(c + 1) for c in mirrored_caps)):
        yield tuple(half[min(i, length - 1 - i)] for i in range(length))


def _gorenstein_h_vectors(d: int, max_entry: int) -> Iterator[tuple[int, ...]]:
    """Symmetric codimension <= 3 Gorenstein h-vectors of socle degree ``d``.

    In codimension at most 3 these are exactly the symmetric vectors whose
    first half is non-decreasing with an O-sequence first difference.
    """
    if d == 0:
        yield (1,)
        return
    caps = [1] + [max_entry] * (d - 1) + [1]
    for v in _half_vectors(d + 1, caps, True):
        if v[0] != 1 or not 1 <= v[1] <= 3:
            continue
        half = v[: d // 2 + 1]
        diff = [half[0]] + [half[i] - half[i - 1] for i in range(1, len(half))]
        if is_o_sequence(diff):
            yield v


def _diag_ok(rows: list[list[int]], k: int, n: int) -> bool:
    """Conditions that only involve diagonals ``<= k`` once diagonal ``k`` is placed."""
    dk = [rows[i][i + k] for i in range(n - k)]
    if not is_o_sequence(dk):
        return False
    prev = [rows[i][i + k - 1] for i in range(n - k + 1)]
    if not is_o_sequence([a - b for a, b in zip(prev, [0] + dk)]):
        return False

    def at(i, j):
        return rows[i][j] if 0 <= i < n and 0 <= j < n and i <= j else 0

    # 2x2 rule at (i, j) with j - i = k - 1: it involves diagonals k-2, k-1, k
    for i in range(n - 1):
        j = i + k - 1
        if j < i + 1 or j >= n:
            continue
        if at(i + 1, j) + at(i, j + 1) < at(i, j) + at(i + 1, j + 1):
            return False
    return True


def enumerate_candidates(
    d: int,
    max_entry: int | None = None,
    *,
    symmetric_diagonals: bool = True,
    ceiling: int = DEFAULT_MAX_DEGREE,
) -> Iterator[Matrix]:
    """Stream candidate rank matrices of size ``d + 1`` in lexicographic order.

    The order is lexicographic in ``(diag 0, diag 1, ...)``.  Entries never
    exceed ``max_entry`` (default: the number of degree-``d//2`` monomials).
    Every diagonal is required to be symmetric unless ``symmetric_diagonals``
    is switched off, in which case only diagonal 0 is.
    """
    if d < 0 or d > ceiling:
        raise ValueError(f"socle degree {d} outside 0..{ceiling}")
    if max_entry is None:
        max_entry = len(monomial_basis(3, d // 2))
    n = d + 1

    def place(rows: list[list[int]], k: int) -> Iterator[Matrix]:
        if k == n:
            yield tuple(tuple(r) for r in rows)
            return
        # M[i][j] <= min(M[i][j-1], M[i+1][j]) follows from the conditions
        caps = [min(rows[i][i + k - 1], rows[i + 1][i + k]) for i in range(n - k)]
        if not any(caps):
            yield tuple(tuple(r) for r in rows)
            return
        for v in _half_vectors(n - k, caps, symmetric_diagonals):
            for i, x in enumerate(v):
                rows[i][i + k] = x
            if _diag_ok(rows, k, n):
                yield from place(rows, k + 1)
            for i in range(n - k):
                rows[i][i + k] = 0

    for h in _gorenstein_h_vectors(d, max_entry):
        rows = [[0] * n for _ in range(n)]
        for i, x in enumerate(h):
            rows[i][i] = x
        for cand in place(rows, 1):
            # the per-diagonal pruning skips nothing the full checker would reject
            assert check_rank_matrix_conditions(cand).passed, cand
            yield cand


# -- realization ----------------------------------------------------------------


@dataclass
class SearchVerdict:
    candidate: Matrix
    status: str
    attempts: int
    seed: int
    witness: Optional[str] = None
    linear_form: Optional[str] = None
    stage: Optional[str] = None
    note: str = ""
    key: str = field(default="")

    def __post_init__(self) -> None:
        if not self.key:
            self.key = candidate_key(self.candidate)

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "candidate": [list(r) for r in self.candidate],
            "status": self.status,
            "attempts": self.attempts,
            "seed": self.seed,
            "witness": self.witness,
            "linear_form": self.linear_form,
            "stage": self.stage,
            "note": self.note,
        }

    def to_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict) -> "SearchVerdict":
        return cls(
            candidate=tuple(tuple(r) for r in data["candidate"]),
            status=data["status"],
            attempts=data["attempts"],
            seed=data["seed"],
            witness=data.get("witness"),
            linear_form=data.get("linear_form"),
            stage=data.get("stage"),
            note=data.get("note", ""),
            key=data.get("key", ""),
        )


def _order(candidate: Matrix) -> int:
    """Number of non-zero diagonals, i.e. the nilpotency order ``k`` it implies."""
    n = len(candidate)
    return sum(1 for k in range(n) if any(candidate[i][i + k] for i in range(n - k)))


def _classification_tries(candidate: Matrix) -> Iterator[tuple[DualGenerator, LinearForm]]:
    d = len(candidate) - 1
    k = _order(candidate)
    if k == 1:
        # l acts as zero: a power sum of max(h) forms in h_1 variables
        h = [candidate[i][i] for i in range(d + 1)]
        yield DualGenerator(_power_sum(max(h), h[1], d)), ZERO
        return
    if d < 2 or k not in (2, 3):
        return
    if k == 3:
        if d % 2 == 0:
            i2, iA = d // 2 - 1, d // 2
        else:
            i2 = iA = (d - 1) // 2
        key = (candidate[i2][i2 + 2], candidate[i2][i2 + 1], candidate[iA][iA])
        for p in valid_parameters_l3(d):
            if (p.r, p.s, p.t) == key:
                for v in p.variants:
                    yield witness_generator(p, v), X
        return
    m = d // 2
    key2 = (candidate[m][m + 1], candidate[m][m])
    for p in valid_parameters_l2(d):
        if (p.r, p.s) == key2:
            yield witness_generator(p), X


def _linear(coeffs) -> Polynomial:
    return Polynomial(3, {e: c for e, c in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), coeffs)})


def _power_sum(count: int, nvars: int, d: int) -> Polynomial:
    """``sum_i (X + i Y + i^2 Z)^d`` over ``count`` points, using only ``nvars`` variables."""
    F = Polynomial.zero(3)
    for i in range(1, count + 1):
        coeffs = [1, i, i * i][:nvars] + [0] * (3 - nvars)
        F = F + _linear(coeffs) ** d
    return F


def _terms_poly(terms) -> Polynomial:
    return Polynomial(3, {e: Fraction(c, monomial_factorial(e)) for e, c in terms})


def _structured_try(rng: random.Random, d: int, k: int, nvars: int = 3) -> tuple[Polynomial, LinearForm]:
    """Sparse generator: up to five monomials (or powers of linear forms when ``k = 1``)."""
    size = rng.randint(1, 5)
    if k <= 1:
        F = Polynomial.zero(3)
        for _ in range(size):
            coeffs = [rng.randint(-2, 2) for _ in range(nvars)] + [0] * (3 - nvars)
            if not any(coeffs):
                coeffs[0] = 1
            F = F + _linear(coeffs) ** d
        return F, ZERO
    pool = [e for e in monomial_basis(3, d) if e[0] <= k - 1]
    top = [e for e in pool if e[0] == k - 1]
    chosen = {rng.choice(top)}
    while len(chosen) < min(size, len(pool)):
        chosen.add(rng.choice(pool))
    return _terms_poly((e, 1) for e in sorted(chosen)), X


def _random_try(rng: random.Random, d: int, k: int, nvars: int = 3) -> tuple[Polynomial, LinearForm]:
    """Random integer coefficients in [-9, 9] on monomials with X-degree < k."""
    if k <= 1:
        F = Polynomial.zero(3)
        for _ in range(rng.randint(1, 8)):
            F = F + _linear([rng.randint(-9, 9) for _ in range(nvars)] + [0] * (3 - nvars)) ** d
        return F, ZERO
    density = rng.choice((0.15, 0.3, 0.5, 1.0))
    terms = []
    for e in monomial_basis(3, d):
        if e[0] <= k - 1 and (e[0] == k - 1 or rng.random() < density):
            terms.append((e, rng.randint(-9, 9)))
    return _terms_poly(terms), X


def attempt_realization(candidate, budget: int = 200, seed: int = 0) -> SearchVerdict:
    """Look for ``(F, l)`` with ``rank_matrix(F, l) == candidate``.

    Deterministic given ``seed`` and the candidate.
    """
    cand: Matrix = tuple(tuple(int(x) for x in r) for r in candidate)
    try:
        report = check_rank_matrix_conditions(cand)
    except ValueError as exc:
        return SearchVerdict(cand, UNREALIZED, 0, seed, note=f"malformed candidate: {exc}")
    if not report.passed:
        failed = sorted({v.condition for v in report.violations})
        return SearchVerdict(
            cand, UNREALIZED, 0, seed, note="fails condition " + ", ".join(f"({c})" for c in failed)
        )
    d = len(cand) - 1
    if d < 1:
        if cand == ((1,),):
            return SearchVerdict(cand, REALIZED, 0, seed, "1", ZERO.to_text(), "trivial")
        return SearchVerdict(cand, UNREALIZED, 0, seed, note="not a rank matrix of a non-zero form")
    k = _order(cand)
    nvars = cand[1][1]
    attempts = 0

    def hit(F, ell) -> bool:
        return not F.is_zero and F.is_homogeneous and rank_matrix(F, ell) == cand

    def done(F, ell, stage) -> SearchVerdict:
        return SearchVerdict(cand, REALIZED, attempts, seed, F.to_text(), ell.to_text(), stage)

    for G, ell in _classification_tries(cand):
        if attempts >= budget:
            break
        attempts += 1
        if hit(G.poly, ell):
            return done(G.poly, ell, "classification")
    rng = random.Random(f"{seed}:{candidate_key(cand)}")
    structured_budget = attempts + (budget - attempts) // 2
    while attempts < structured_budget:
        attempts += 1
        F, ell = _structured_try(rng, d, k, nvars)
        if hit(F, ell):
            return done(F, ell, "structured")
    while attempts < budget:
        attempts += 1
        F, ell = _random_try(rng, d, k, nvars)
        if hit(F, ell):
            return done(F, ell, "random")
    return SearchVerdict(cand, UNREALIZED, attempts, seed, note="inconclusive: no witness within budget")


def verify_verdict(v: SearchVerdict) -> bool:
    """Recompute the rank matrix from a stored witness."""
    from .poly import parse_linear_form, parse_polynomial

    if v.status != REALIZED:
        return True
    F = parse_polynomial(v.witness, 3)
    ell = parse_linear_form(v.linear_form, 3)
    return rank_matrix(F, ell) == v.candidate


# -- driver ------------------------------------------------------------------------


def _work(args) -> SearchVerdict:
    cand, budget, seed = args
    return attempt_realization(cand, budget, seed)


def read_log(path: Path) -> list[SearchVerdict]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(SearchVerdict.from_json(json.loads(line)))
    return out


def summarize(verdicts: Sequence[SearchVerdict]) -> dict:
    counts: dict[str, int] = {}
    for v in verdicts:
        counts[v.status] = counts.get(v.status, 0) + 1
    resistant = [v for v in verdicts if v.status != REALIZED]
    three_line = [v for v in verdicts if _order(v.candidate) <= 3]
    return {
        "total": len(verdicts),
        "counts": dict(sorted(counts.items())),
        "at_most_three_diagonals": {
            "total": len(three_line),
            "realized": sum(1 for v in three_line if v.status == REALIZED),
        },
        "resistant": [{"key": v.key, "candidate": [list(r) for r in v.candidate]} for v in resistant],
    }


def run_search(
    d: int,
    budget: int,
    seed: int,
    output: str | os.PathLike,
    *,
    resume: bool = False,
    max_entry: int | None = None,
    workers: int | None = None,
    symmetric_diagonals: bool = True,
) -> dict:
    """Enumerate candidates, realize each, append verdicts to an NDJSON log.

    With ``resume`` the log is read first and candidates already present are
    skipped; otherwise it is truncated.  Lines follow enumeration order.
    """
    path = Path(output)
    done: dict[str, SearchVerdict] = {}
    if resume and path.exists():
        done = {v.key: v for v in read_log(path)}
    elif path.exists():
        path.unlink()
    todo = [c for c in enumerate_candidates(d, max_entry, symmetric_diagonals=symmetric_diagonals)
            if candidate_key(c) not in done]
    if workers is None:
        workers = default_workers()
    jobs = [(c, budget, seed) for c in todo]
    with open(path, "a", encoding="utf-8") as fh:
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = pool.map(_work, jobs, chunksize=4)
                for v in results:
                    fh.write(v.to_line() + "\n")
                    done[v.key] = v
        else:
            for job in jobs:
                v = _work(job)
                fh.write(v.to_line() + "\n")
                done[v.key] = v
    return summarize(read_log(path))
