"""Rank matrices, Jordan degree type matrices and Jordan types.

``M[i][j]`` is the rank of multiplication by ``l^(j-i)`` from ``A_i`` to
``A_j``.  Its ``k``-th diagonal is the Hilbert function of ``A^(k)``.  ``J[i][j]``
counts the Jordan strings of ``l`` that start in degree ``i`` and end in
degree ``j``.  All index arithmetic treats positions outside ``[0, d]`` as 0.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .apolarity import (
    GeneratorLike,
    as_dual,
    derived_hilbert_functions,
    hilbert_function,
    multiplication_matrix,
)
from .poly import LinearForm


class InvalidRankMatrixError(ValueError):
    """The matrix cannot be a rank matrix: a string count came out negative."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts if p), reverse=True)
        if parts and parts[-1] < 0:
            raise ValueError("partition parts must be positive")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiplicities(cls, counts: Sequence[int]) -> "Partition":
        """``counts[k]`` parts equal to ``k + 1``."""
        if any(c < 0 for c in counts):
            raise ValueError(f"negative multiplicity in {list(counts)}")
        return cls(k + 1 for k, c in enumerate(counts) for _ in range(c))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > k) for k in range(self[0]))

    def dominated_by(self, other: "Partition") -> bool:
        """True when every partial sum of ``self`` is at most that of ``other``."""
        if self.size != sum(other):
            raise ValueError("dominance compares partitions of the same integer")
        a = b = 0
        for k in range(max(len(self), len(other))):
            a += self[k] if k < len(self) else 0
            b += other[k] if k < len(other) else 0
            if a > b:
                return False
        return True

    def compact(self) -> str:
        """Exponent notation, e.g. ``(4^8, 2^3)``."""
        groups = []
        for p in sorted(set(self), reverse=True):
            c = self.count(p)
            groups.append(str(p) if c == 1 else f"{p}^{c}")
        return "(" + ", ".join(groups) + ")"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class JordanDegreeType(tuple):
    """Parts of the Jordan type indexed by the degree where each string starts.

    Entries are ``(part, degree)`` pairs, ordered by decreasing part and then
    by increasing degree.
    """

    def __new__(cls, pairs: Iterable[tuple[int, int]] = ()):
        pairs = sorted(((int(p), int(deg)) for p, deg in pairs), key=lambda x: (-x[0], x[1]))
        return super().__new__(cls, pairs)

    @property
    def partition(self) -> Partition:
        return Partition(p for p, _ in self)

    def to_json(self) -> list[dict]:
        return [{"part": p, "degree": deg} for p, deg in self]

    def __str__(self) -> str:
        return "(" + ", ".join(f"{p}_{deg}" for p, deg in self) + ")"


class _SquareIntMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def size(self) -> int:
        return len(self.rows)

    def get(self, i: int, j: int) -> int:
        """Entry ``(i, j)``, or 0 when either index falls outside the matrix."""
        n = len(self.rows)
        if 0 <= i < n and 0 <= j < n:
            return self.rows[i][j]
        return 0

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def diag(self, k: int) -> tuple[int, ...]:
        return tuple(self.rows[i][i + k] for i in range(self.size - k))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> list[list[int]]:
        return self.tolist()

    def pretty(self) -> str:
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in self.rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, _SquareIntMatrix):
            return type(self) is type(other) and self.rows == other.rows
        if isinstance(other, (list, tuple)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.rows))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.tolist()})"


class RankMatrix(_SquareIntMatrix):
    """Upper-triangular matrix of non-negative ranks ``M[i][j]``."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Iterable[int]]):
        super().__init__(rows)
        for i, r in enumerate(self.rows):
            if any(x < 0 for x in r):
                raise ValueError("rank matrix entries must be non-negative")
            if any(r[:i]):
                raise ValueError("rank matrix must be zero below the diagonal")

    @property
    def socle_degree(self) -> int:
        return self.size - 1


class JdtMatrix(_SquareIntMatrix):
    """Upper-triangular matrix of string counts (also holds the intermediate ``J'``)."""

    __slots__ = ()

    def strings_dimension(self) -> int:
        """``sum (j - i + 1) * J[i][j]``: the dimension covered by the strings."""
        return sum(
            (j - i + 1) * self.rows[i][j] for i in range(self.size) for j in range(i, self.size)
        )


def rank_matrix(F: GeneratorLike, ell: LinearForm) -> RankMatrix:
    """``M[i][j] = h_{A^(j-i)}(i)``, zero once ``l^(j-i) o F`` vanishes."""
    F = as_dual(F)
    d = F.degree
    hs = derived_hilbert_functions(F, ell)
    return RankMatrix(
        [
            [hs[j - i][i] if i <= j and j - i < len(hs) else 0 for j in range(d + 1)]
            for i in range(d + 1)
        ]
    )


def _coerce_rank(M) -> RankMatrix:
    return M if isinstance(M, RankMatrix) else RankMatrix(M)


def jdt_prime(M: RankMatrix | Sequence[Sequence[int]]) -> JdtMatrix:
    """``J'[i][j] = M[i][j] - M[i][j+1]``: strings through ``A_i`` ending in degree ``j``."""
    M = _coerce_rank(M)
    n = M.size
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = M.get(i, j) - M.get(i, j + 1)
            if v < 0:
                raise InvalidRankMatrixError(
                    f"M[{i}][{j}] = {M.get(i, j)} < M[{i}][{j + 1}] = {M.get(i, j + 1)}"
                )
            rows[i][j] = v
    return JdtMatrix(rows)


def jdt_from_rank(M: RankMatrix | Sequence[Sequence[int]]) -> JdtMatrix:
    """Jordan degree type matrix ``J[i][j] = J'[i][j] - J'[i-1][j]``.

    Raises :class:`InvalidRankMatrixError` when an entry would be negative,
    i.e. when ``M`` breaks ``M[i][j] + M[i-1][j+1] >= M[i-1][j] + M[i][j+1]``.
    """
    Jp = jdt_prime(M)
    n = Jp.size
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Jp.get(i, j) - Jp.get(i - 1, j)
            if v < 0:
                raise InvalidRankMatrixError(
                    f"negative string count J[{i}][{j}] = {v}; the 2x2 inequality fails at "
                    f"rows {i - 1},{i} columns {j},{j + 1}"
                )
            rows[i][j] = v
    return JdtMatrix(rows)


def rank_from_jdt(J: JdtMatrix | Sequence[Sequence[int]]) -> RankMatrix:
    """Inverse of :func:`jdt_from_rank`.

    ``J'[i][j]`` is the sum of ``J[k][j]`` over ``k <= i`` and ``M[i][j]`` the sum
    of ``J'[i][k]`` over ``k >= j``.
    """
    J = J if isinstance(J, JdtMatrix) else JdtMatrix(J)
    n = J.size
    Jp = [[0] * n for _ in range(n)]
    for j in range(n):
        acc = 0
        for i in range(j + 1):
            acc += J[i, j]
            Jp[i][j] = acc
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        acc = 0
        for j in range(n - 1, i - 1, -1):
            acc += Jp[i][j]
            rows[i][j] = acc
    return RankMatrix(rows)


def jordan_degree_type(J: JdtMatrix | Sequence[Sequence[int]]) -> JordanDegreeType:
    """``J[i][j]`` copies of the part ``j - i + 1`` starting in degree ``i``."""
    J = J if isinstance(J, JdtMatrix) else JdtMatrix(J)
    n = J.size
    return JordanDegreeType(
        (j - i + 1, i) for i in range(n) for j in range(i, n) for _ in range(J[i, j])
    )


def _dims(F: GeneratorLike, ell: LinearForm) -> list[int]:
    d = as_dual(F).degree
    dims = [h.dimension for h in derived_hilbert_functions(F, ell)]
    return dims + [0] * (d + 3 - len(dims))


def partition_from_dimensions(dims: Sequence[int]) -> Partition:
    """Jordan type from ``(dim A^(0), dim A^(1), ...)``.

    The number of parts equal to ``k + 1`` is the second difference
    ``dims[k] + dims[k+2] - 2 dims[k+1]``, with missing entries read as 0.
    """
    dims = list(dims) + [0, 0]
    counts = [dims[k] + dims[k + 2] - 2 * dims[k + 1] for k in range(len(dims) - 2)]
    return Partition.from_multiplicities(counts)


def jordan_type(F: GeneratorLike, ell: LinearForm) -> Partition:
    """Jordan type of multiplication by ``l`` on ``A = S/Ann(F)``."""
    dims = _dims(F, ell)
    P = partition_from_dimensions(dims)
    # the same partition, read as the conjugate of the successive rank drops
    drops = Partition(dims[k] - dims[k + 1] for k in range(len(dims) - 1))
    assert P == drops.conjugate(), (P, drops)
    return P


def _int_matrix_power_ranks(rows: list[list[int]]) -> list[int]:
    """Ranks of ``T^0, T^1, ...`` for a nilpotent integer matrix, stopping at 0."""
    from .exact_linalg import int_rank

    n = len(rows)
    sparse = [[(k, v) for k, v in enumerate(r) if v] for r in rows]
    ranks = [n]
    power = [list(r) for r in rows]
    for _ in range(n + 1):
        r = int_rank(power) if n else 0
        ranks.append(r)
        if r == 0:
            return ranks
        nxt = []
        for prow in power:
            acc = [0] * n
            for k, pv in enumerate(prow):
                if pv:
                    for col, tv in sparse[k]:
                        acc[col] += pv * tv
            nxt.append(acc)
        power = nxt
    raise ArithmeticError("multiplication matrix is not nilpotent")


def jordan_type_oracle(F: GeneratorLike, ell: LinearForm) -> Partition:
    """Jordan type read off the ranks of powers of the multiplication matrix.

    The number of Jordan blocks of size at least ``k`` is ``r_(k-1) - r_k``
    where ``r_k = rank T^k``.
    """
    T = multiplication_matrix(F, ell)
    den = 1
    for x in T.entries:
        den = math.lcm(den, x.denominator)
    rows = [[int(x * den) for x in T.row(i)] for i in range(T.rows)]
    ranks = _int_matrix_power_ranks(rows)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return Partition(at_least).conjugate()


def conjugate_hilbert(F: GeneratorLike) -> Partition:
    """``h_A`` read as a partition and conjugated: the strong Lefschetz Jordan type."""
    return Partition(hilbert_function(F)).conjugate()
