"""Dense matrices over Q with exact rank, pivot columns and linear solves.

Elimination is fraction-free (Bareiss): every row is first scaled to integers
by the lcm of its denominators, which changes neither the rank nor the pivot
columns, and the integer matrix is then reduced with exact divisions by the
previous pivot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class RationalMatrix:
    """Row-major matrix of ``Fraction`` entries."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        entries = tuple(Fraction(x) for x in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        b_cols = [other.entries[j :: other.cols] for j in range(other.cols)] if other.rows else []
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum((x * y for x, y in zip(r, b_cols[j])), Fraction(0)))
        return RationalMatrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(x.numerator), str(x.denominator)] for x in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalMatrix":
        try:
            entries = tuple(Fraction(int(p), int(q)) for p, q in data["entries"])
            return cls(int(data["rows"]), int(data["cols"]), entries)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from exc


def integer_rows(rows: Iterable[Sequence[Number]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators to get integer rows."""
    out = []
    for r in rows:
        r = [Fraction(x) for x in r]
        den = 1
        for x in r:
            den = math.lcm(den, x.denominator)
        out.append([x.numerator * (den // x.denominator) for x in r])
    return out


def _bareiss(a: list[list[int]], ncols: int) -> list[int]:
    """Reduce integer rows ``a`` in place; return the pivot columns."""
    nrows = len(a)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and a[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        pivots.append(c)
        prow = a[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    a[i] = row[:c] + [(piv * x) // prev for x in row[c:]]
                continue
            a[i] = row[:c] + [0] + [
                (piv * x - f * y) // prev for x, y in zip(row[c + 1 :], prow[c + 1 :])
            ]
        prev = piv
        r += 1
    return pivots


def _as_int_rows(m: RationalMatrix | Sequence[Sequence[Number]]) -> tuple[list[list[int]], int]:
    if isinstance(m, RationalMatrix):
        return integer_rows(m.row(i) for i in range(m.rows)), m.cols
    rows = integer_rows(m)
    return rows, (len(rows[0]) if rows else 0)


def pivot_columns(m: RationalMatrix | Sequence[Sequence[Number]]) -> list[int]:
    """Indices of the lexicographically first maximal independent column set."""
    rows, ncols = _as_int_rows(m)
    return _bareiss(rows, ncols)


def rank(m: RationalMatrix | Sequence[Sequence[Number]]) -> int:
    """Exact rank over Q."""
    return len(pivot_columns(m))


def int_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix given as a list of rows (rows are copied)."""
    if not rows:
        return 0
    return len(_bareiss([list(r) for r in rows], len(rows[0])))


def solve(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Solve ``a @ X = b`` exactly for ``X``.

    ``a`` must have independent columns; ``ValueError`` is raised when some
    column of ``b`` is not in the column space of ``a``.
    """
    if a.rows != b.rows:
        raise ValueError("shape mismatch")
    n = a.cols
    # augmented Gauss-Jordan over Fractions; sizes here are small
    aug = [list(a.row(i)) + list(b.row(i)) for i in range(a.rows)]
    r = 0
    for c in range(n):
        p = next((i for i in range(r, a.rows) if aug[i][c] != 0), None)
        if p is None:
            raise ValueError("coefficient matrix has dependent columns")
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(a.rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        r += 1
    for i in range(r, a.rows):
        if any(aug[i][n:]):
            raise ValueError("system is inconsistent")
    return RationalMatrix(n, b.cols, tuple(x for i in range(n) for x in aug[i][n:]))
