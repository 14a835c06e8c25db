"""O-sequences and the necessary conditions on a candidate rank matrix.

A vector is an O-sequence when it is the Hilbert function of some standard
graded quotient of a polynomial ring.  Macaulay's bound ``h^<i>`` caps the
growth from degree ``i`` to ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Sequence


def macaulay_representation(h: int, i: int) -> list[tuple[int, int]]:
    """``[(a_i, i), (a_(i-1), i-1), ...]`` with ``h = sum C(a_k, k)`` and strictly falling ``a_k``."""
    if i < 1:
        raise ValueError("i must be at least 1")
    if h < 0:
        raise ValueError("h must be non-negative")
    out = []
    k = i
    while h > 0:
        a = k
        while comb(a + 1, k) <= h:
            a += 1
        out.append((a, k))
        h -= comb(a, k)
        k -= 1
    return out


def macaulay_growth_bound(h: int, i: int) -> int:
    """``h^<i>``: the largest value an O-sequence may take in degree ``i + 1``."""
    return sum(comb(a + 1, k + 1) for a, k in macaulay_representation(h, i))


@dataclass(frozen=True)
class OSequenceResult:
    ok: bool
    index: int | None = None  # first offending position when not ok

    def __bool__(self) -> bool:
        return self.ok


def is_o_sequence(v: Sequence[int]) -> OSequenceResult:
    """Decide whether ``v`` is an O-sequence and locate the first violation.

    Needs ``v(0) <= 1``, non-negative entries and ``v(i+1) <= v(i)^<i>`` for
    ``i >= 1``.  A vector with ``v(0) = 0`` is the Hilbert function of the zero
    ring only, so every later entry must vanish.
    """
    v = [int(x) for x in v]
    for k, x in enumerate(v):
        if x < 0:
            return OSequenceResult(False, k)
    if not v:
        return OSequenceResult(True)
    if v[0] > 1:
        return OSequenceResult(False, 0)
    if v[0] == 0:
        for k, x in enumerate(v):
            if x:
                return OSequenceResult(False, k)
        return OSequenceResult(True)
    for i in range(1, len(v) - 1):
        if v[i + 1] > macaulay_growth_bound(v[i], i):
            return OSequenceResult(False, i + 1)
    return OSequenceResult(True)


@lru_cache(maxsize=None)
def _lex_positions(n: int, degree: int) -> dict[tuple[int, ...], int]:
    """Position of each degree-``degree`` monomial in ``n`` variables, lex-descending."""
    mons = [
        tuple(c.count(k) for k in range(n))
        for c in combinations_with_replacement(range(n), degree)
    ]
    mons.sort(reverse=True)
    return {m: p for p, m in enumerate(mons)}


def lex_segment_is_o_sequence(v: Sequence[int]) -> bool:
    """Independent check through lex-segment order ideals.

    With ``n = v(1)`` variables, keep the ``v(i)`` lex-smallest monomials of
    each degree.  ``v`` is an O-sequence exactly when these sets form an order
    ideal, i.e. every divisor of a kept monomial is kept.
    """
    v = [int(x) for x in v]
    if any(x < 0 for x in v):
        return False
    if not v:
        return True
    if v[0] != 1:
        return v[0] == 0 and not any(v)
    if len(v) == 1:
        return True
    n = v[1]
    kept_prev = None
    for i in range(1, len(v)):
        pos = _lex_positions(n, i)
        total = len(pos)
        if v[i] > total:
            return False
        kept = {m for m, p in pos.items() if p >= total - v[i]}
        if kept_prev is not None:
            for m in kept:
                for k in range(n):
                    if m[k]:
                        q = m[:k] + (m[k] - 1,) + m[k + 1 :]
                        if q not in kept_prev:
                            return False
        kept_prev = kept
    return True


@dataclass(frozen=True)
class Violation:
    condition: str  # "i", "ii" or "iii"
    location: dict
    detail: str

    def to_json(self) -> dict:
        return {"condition": self.condition, "location": self.location, "detail": self.detail}


@dataclass(frozen=True)
class ConditionReport:
    violations: tuple[Violation, ...] = ()
    warnings: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def failed(self, condition: str) -> list[Violation]:
        return [v for v in self.violations if v.condition == condition]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [v.to_json() for v in self.violations],
            "warnings": list(self.warnings),
        }

    def to_text(self) -> str:
        lines = ["all conditions hold" if self.passed else "conditions violated"]
        for v in self.violations:
            lines.append(f"  ({v.condition}) {v.detail}")
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        return "\n".join(lines)


def _square_upper(M) -> list[list[int]]:
    rows = M.tolist() if hasattr(M, "tolist") else M
    try:
        rows = [[int(x) for x in r] for r in rows]
    except (TypeError, ValueError) as exc:
        raise ValueError(f"matrix entries must be integers: {exc}") from exc
    n = len(rows)
    if n == 0:
        raise ValueError("matrix is empty")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ValueError(f"row {i} has {len(r)} entries, expected {n}")
        if any(x < 0 for x in r):
            raise ValueError(f"row {i} has a negative entry")
        if any(r[:i]):
            raise ValueError(f"row {i} is non-zero below the diagonal")
    return rows


def check_rank_matrix_conditions(M) -> ConditionReport:
    """Test the necessary conditions on an upper-triangular candidate ``M``.

    (i)   every diagonal is an O-sequence;
    (ii)  ``diag(i) - (0, diag(i+1))`` is an O-sequence for each ``i``;
    (iii) ``M[i+1][j] + M[i][j+1] >= M[i][j] + M[i+1][j+1]`` for ``i+1 <= j <= d``,
          entries past the last column counting as 0.

    Asymmetric non-zero diagonals only raise a warning.
    """
    rows = _square_upper(M)
    n = len(rows)

    def at(i: int, j: int) -> int:
        return rows[i][j] if 0 <= i < n and 0 <= j < n else 0

    diags = [[rows[i][i + k] for i in range(n - k)] for k in range(n)]
    violations: list[Violation] = []
    warnings: list[str] = []
    for k, dg in enumerate(diags):
        res = is_o_sequence(dg)
        if not res:
            violations.append(
                Violation(
                    "i",
                    {"diagonal": k, "index": res.index, "vector": dg},
                    f"diagonal {k} = {tuple(dg)} is not an O-sequence (entry {res.index})",
                )
            )
        if any(dg) and dg != dg[::-1]:
            warnings.append(f"diagonal {k} = {tuple(dg)} is not symmetric")
    for k in range(n - 1):
        diff = [a - b for a, b in zip(diags[k], [0] + diags[k + 1])]
        res = is_o_sequence(diff)
        if not res:
            violations.append(
                Violation(
                    "ii",
                    {"diagonal": k, "index": res.index, "vector": diff},
                    f"diag({k}) - (0, diag({k + 1})) = {tuple(diff)} is not an O-sequence "
                    f"(entry {res.index})",
                )
            )
    for i in range(n - 1):
        for j in range(i + 1, n):
            u, v, w, z = at(i, j), at(i, j + 1), at(i + 1, j), at(i + 1, j + 1)
            if w + v < u + z:
                violations.append(
                    Violation(
                        "iii",
                        {"i": i, "j": j, "submatrix": [[u, v], [w, z]]},
                        f"submatrix ({u},{v};{w},{z}) at (i,j)=({i},{j}): "
                        f"{w}+{v} < {u}+{z}",
                    )
                )
    return ConditionReport(tuple(violations), tuple(warnings))
