"""Rank matrices for linear forms with ``l^3 = 0`` in three variables.

With ``l = x`` every dual generator with ``x^3 o F = 0`` has the shape
``F = X^2 G_(d-2) + X G_(d-1) + G_d`` with ``G_k`` in ``Q[Y, Z]``.  The
Hilbert functions of ``A``, ``A^(1)`` and ``A^(2)`` are then fixed by the
three middle values ``(r, s, t)`` (up to a two-way split when ``t = 3r``).
The ``l^2 = 0`` case is the same story with two diagonals and a pair
``(r, s)``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from .apolarity import (
    DualGenerator,
    GeneratorLike,
    HilbertFunction,
    as_dual,
    derived_hilbert_functions,
    hilbert_function,
    mixed_hessian_rank,
    nilpotency_order,
)
from .jordan import Partition, partition_from_dimensions
from .poly import LinearForm, Polynomial
from .sequences import is_o_sequence

UNIQUE = "unique"
VARIANT_A = "t3r_variant_a"
VARIANT_B = "t3r_variant_b"

# rk Hess^(r, d-r-1) = h_(A^(1))(r) in the frame of A^(1); fixed by running
# both t = 3r witnesses through the verification sweep.
T3R_VARIANT_BY_RANK = {-1: VARIANT_A, 0: VARIANT_B}  # keyed by value - 3r


@dataclass(frozen=True, order=True)
class ParamTriple:
    d: int
    r: int
    s: int
    t: int
    clause: str = field(compare=False)

    @property
    def is_t3r(self) -> bool:
        return self.clause == "(1)" and self.t == 3 * self.r

    @property
    def variants(self) -> tuple[str, ...]:
        return (VARIANT_A, VARIANT_B) if self.is_t3r else (UNIQUE,)

    def to_json(self) -> dict:
        return {"d": self.d, "r": self.r, "s": self.s, "t": self.t, "clause": self.clause}


@dataclass(frozen=True, order=True)
class ParamPair:
    d: int
    r: int
    s: int
    clause: str = field(compare=False)

    def to_json(self) -> dict:
        return {"d": self.d, "r": self.r, "s": self.s, "clause": self.clause}


@dataclass(frozen=True)
class ClassifiedProfile:
    """Hilbert functions along the non-zero diagonals of the rank matrix.

    ``h_A2`` is empty for the two-diagonal (``l^2 = 0``) profiles.
    """

    h_A: HilbertFunction
    h_A1: HilbertFunction
    h_A2: HilbertFunction
    variant: str = UNIQUE

    @property
    def diagonals(self) -> tuple[HilbertFunction, ...]:
        return tuple(h for h in (self.h_A, self.h_A1, self.h_A2) if h)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(h.dimension for h in self.diagonals)

    def to_json(self) -> dict:
        out = {"h_A": list(self.h_A), "h_A1": list(self.h_A1), "variant": self.variant}
        if self.h_A2:
            out["h_A2"] = list(self.h_A2)
        return out


def _check_degree(d: int, least: int = 2) -> None:
    if not isinstance(d, int) or d < least:
        raise ValueError(f"socle degree must be an integer >= {least}, got {d!r}")


def valid_parameters_l3(d: int) -> list[ParamTriple]:
    """Every ``(r, s, t)`` realised by some ``A`` and ``l`` with ``l^2 != 0 = l^3``.

    Ordered by clause, then ``(r, s, t)``.
    """
    _check_degree(d)
    out = []
    if d % 2 == 0:
        m = d // 2
        if d >= 4:
            for r in range(1, m):
                for s in range(2 * r, m + r + 1):
                    for t in range(2 * s - r, m + s + 2):
                        out.append(ParamTriple(d, r, s, t, "(1)"))
        for t in range(3 * m - 2, 3 * m + 1):
            out.append(ParamTriple(d, m, d - 1, t, "(2)"))
    else:
        m = (d - 1) // 2
        if d >= 5:
            for r in range(1, m):
                for s in range(2 * r, m + r + 1):
                    for t in range(2 * s - r, m + s + 2):
                        out.append(ParamTriple(d, r, s, t, "(1)"))
            for r in range(1, m):
                out.append(ParamTriple(d, r, m + r + 1, d + r, "(2)"))
        for s in (d - 1, d):
            for t in range(m + s - 1, 3 * m + 1):
                out.append(ParamTriple(d, m, s, t, "(3)"))
    return out


def _symmetric(half, socle: int) -> HilbertFunction:
    """Extend ``half(i)``, given for ``i <= socle // 2``, by ``h(i) = h(socle - i)``."""
    if socle < 0:
        return HilbertFunction(())
    return HilbertFunction(half(min(i, socle - i)) for i in range(socle + 1))


def _hA_clause1(r: int, s: int, t: int, short_at_r: bool):
    def h(i: int) -> int:
        if i == 0:
            return 1
        if t == 3 * r:
            if i <= r - 1:
                return 3 * i
            if i == r and short_at_r:
                return 3 * r - 1
            return 3 * r
        if i <= r:
            return 3 * i
        if i <= s - r - 1:
            return 2 * i + r + 1
        if i == s - r and t > 2 * s - r:
            return 2 * i + r + 1 if s > 2 * r else 2 * i + r
        if i <= t - s - 1:
            return i + s + 1
        return t

    return h


def predicted_profile(p: ParamTriple) -> tuple[ClassifiedProfile, ...]:
    """Closed-form Hilbert functions of ``A``, ``A^(1)``, ``A^(2)`` for ``p``.

    Two profiles come back exactly when ``t = 3r`` in clause (1); they differ
    only at degree ``r`` where ``h_A`` is ``3r - 1`` (variant a) or ``3r``
    (variant b).
    """
    d, r, s, t = p.d, p.r, p.s, p.t
    if p not in valid_parameters_l3(d):
        raise ValueError(f"{p} is not an admissible parameter triple")
    if p.clause == "(1)":
        h2 = _symmetric(lambda i: i + 1 if i <= r - 1 else r, d - 2)
        h1 = _symmetric(
            lambda i: 2 * i + 1 if i <= r - 1 else (i + r + 1 if i <= s - r - 1 else s), d - 1
        )
        if p.is_t3r:
            return (
                ClassifiedProfile(_symmetric(_hA_clause1(r, s, t, True), d), h1, h2, VARIANT_A),
                ClassifiedProfile(_symmetric(_hA_clause1(r, s, t, False), d), h1, h2, VARIANT_B),
            )
        return (ClassifiedProfile(_symmetric(_hA_clause1(r, s, t, False), d), h1, h2),)
    if d % 2 == 0:  # even (2): r = d/2, s = d - 1
        m = d // 2
        h2 = _symmetric(lambda i: i + 1, d - 2)
        h1 = _symmetric(lambda i: 2 * i + 1, d - 1)
        hA = _symmetric(lambda i: 1 if i == 0 else (3 * i if i < m else t), d)
        return (ClassifiedProfile(hA, h1, h2),)
    m = (d - 1) // 2
    if p.clause == "(2)":
        h2 = _symmetric(lambda i: i + 1 if i <= r - 1 else r, d - 2)
        h1 = _symmetric(lambda i: 2 * i + 1 if i <= r else i + 1 + r, d - 1)
        hA = _symmetric(
            lambda i: 1 if i == 0 else (3 * i if i <= r + 1 else 2 * i + 1 + r), d
        )
        return (ClassifiedProfile(hA, h1, h2),)
    # odd (3): r = (d-1)/2, middle values s and t
    h2 = _symmetric(lambda i: i + 1, d - 2)
    h1 = _symmetric(lambda i: 2 * i + 1 if i < m else s, d - 1)
    hA = _symmetric(lambda i: 1 if i == 0 else (3 * i if i < m else t), d)
    return (ClassifiedProfile(hA, h1, h2),)


def _yz(a: int, b: int) -> Polynomial:
    """``Y^a Z^b / (a! b!)`` in the three-variable dual ring."""
    return Polynomial.monomial((0, a, b), Fraction(1, factorial(a) * factorial(b)))


def _assemble(g2: Optional[Polynomial], g1: Optional[Polynomial], g0: Optional[Polynomial]) -> DualGenerator:
    F = Polynomial.zero(3)
    for power, g in ((2, g2), (1, g1), (0, g0)):
        if g is not None:
            F = F + Polynomial.monomial((power, 0, 0)) * g
    return DualGenerator(F)


def _witness_l3(p: ParamTriple, variant: str) -> DualGenerator:
    d, r, s, t = p.d, p.r, p.s, p.t
    if p.clause == "(1)":
        g2 = _yz(r - 1, d - r - 1)
        if p.is_t3r:
            g2 = g2 * Fraction(1, 2)
            return _assemble(g2, None, _yz(r, d - r) if variant == VARIANT_B else None)
        g1 = None if s == 2 * r else _yz(d - s + 2 * r, s - 2 * r - 1)
        g0 = None if t == 2 * s - r else _yz(d - t + 3 * r + 1, t - 3 * r - 1)
        return _assemble(g2, g1, g0)
    if d % 2 == 0:
        m = d // 2
        g0 = {3 * m - 2: None, 3 * m - 1: _yz(d, 0), 3 * m: _yz(d, 0) + _yz(0, d)}[t]
        return _assemble(_yz(m - 1, m - 1), None, g0)
    m = (d - 1) // 2
    if p.clause == "(2)":
        return _assemble(_yz(r - 1, d - r - 1), _yz(m + r, m - r), None)
    g1 = None if s == d - 1 else _yz(0, d - 1)
    g0 = _yz(0, d) if s == d - 1 and t == 3 * m else None
    return _assemble(_yz(m, m - 1), g1, g0)


def valid_parameters_l2(d: int) -> list[ParamPair]:
    """Every ``(r, s)`` realised by some ``A`` and ``l`` with ``l != 0 = l^2``."""
    _check_degree(d)
    c = (d + 1) // 2
    out = []
    if d >= 3:
        # s tops out at d//2 + r + 1, where h_A grows linearly up to the middle;
        # for even d this is one above ceil(d/2) + r
        for r in range(1, c):
            for s in range(2 * r, d // 2 + r + 2):
                out.append(ParamPair(d, r, s, "main"))
    for s in ((d,) if d % 2 else (d, d + 1)):
        out.append(ParamPair(d, c, s, "boundary"))
    return out


def _profile_l2(d: int, r: int, s: int) -> ClassifiedProfile:
    h1 = _symmetric(lambda i: i + 1 if i <= r - 1 else r, d - 1)
    hA = _symmetric(
        lambda i: 2 * i + 1 if i <= r - 1 else (i + r + 1 if i <= s - r - 1 else s), d
    )
    return ClassifiedProfile(hA, h1, HilbertFunction(()))


def predicted_profile_l2(p: ParamPair) -> ClassifiedProfile:
    """``h_A`` and ``h_(A^(1))`` for an admissible pair."""
    if p not in valid_parameters_l2(p.d):
        raise ValueError(f"{p} is not an admissible parameter pair")
    return _profile_l2(p.d, p.r, p.s)


def _witness_l2(p: ParamPair) -> DualGenerator:
    d, r, s = p.d, p.r, p.s
    if p.clause == "main":
        g1 = _yz(r - 1, d - r)
        g0 = None if s == 2 * r else _yz(d - s + 2 * r + 1, s - 2 * r - 1)
        return _assemble(None, g1, g0)
    a = (d - 1) // 2
    g0 = _yz(d, 0) + _yz(0, d) if s == d + 1 else None
    return _assemble(None, _yz(a, d - 1 - a), g0)


def witness_generator(p: ParamTriple | ParamPair, variant: str | None = None) -> DualGenerator:
    """An explicit ``F`` with ``l = x`` realising ``p`` (and ``variant`` when ``t = 3r``)."""
    if isinstance(p, ParamPair):
        if p not in valid_parameters_l2(p.d):
            raise ValueError(f"{p} is not an admissible parameter pair")
        return _witness_l2(p)
    if p not in valid_parameters_l3(p.d):
        raise ValueError(f"{p} is not an admissible parameter triple")
    if variant is None:
        variant = p.variants[0]
    if variant not in p.variants:
        raise ValueError(f"variant {variant!r} does not apply to {p}; choose from {p.variants}")
    return _witness_l3(p, variant)


X = LinearForm.variable(0, 3)


def observed_profile(F: GeneratorLike, ell: LinearForm = X) -> tuple[HilbertFunction, ...]:
    return tuple(derived_hilbert_functions(F, ell))


def params_of_l3(F: GeneratorLike, ell: LinearForm = X) -> tuple[int, int, int]:
    """``(r, s, t)`` read off the derived Hilbert functions at the middle degrees."""
    d = as_dual(F).degree
    hs = derived_hilbert_functions(F, ell)
    hs = hs + [HilbertFunction(())] * (3 - len(hs))
    if d % 2 == 0:
        i2, iA = d // 2 - 1, d // 2
    else:
        i2 = iA = (d - 1) // 2

    def at(h, i):
        return h[i] if 0 <= i < len(h) else 0

    return at(hs[2], i2), at(hs[1], i2), at(hs[0], iA)


def params_of_l2(F: GeneratorLike, ell: LinearForm = X) -> tuple[int, int]:
    d = as_dual(F).degree
    hs = derived_hilbert_functions(F, ell) + [HilbertFunction(())] * 2
    m = d // 2
    return (hs[1][m] if m < len(hs[1]) else 0), hs[0][m]


@dataclass
class SweepEntry:
    params: dict
    variant: str
    witness: str
    expected: list
    observed: list
    ok: bool
    note: str = ""

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "variant": self.variant,
            "witness": self.witness,
            "expected": self.expected,
            "observed": self.observed,
            "ok": self.ok,
            "note": self.note,
        }


def _profile_is_consistent(prof: ClassifiedProfile) -> str:
    """Empty string when every diagonal and difference is an O-sequence and symmetric."""
    diags = [list(h) for h in prof.diagonals]
    for k, h in enumerate(diags):
        if h != h[::-1]:
            return f"diagonal {k} not symmetric"
        if not is_o_sequence(h):
            return f"diagonal {k} not an O-sequence"
    for k in range(len(diags) - 1):
        diff = [a - b for a, b in zip(diags[k], [0] + diags[k + 1])]
        if not is_o_sequence(diff):
            return f"difference {k} not an O-sequence"
    return ""


def _verify_one(item) -> SweepEntry:
    p, variant = item
    if isinstance(p, ParamPair):
        prof = predicted_profile_l2(p)
        want_order = 2
    else:
        prof = {pr.variant: pr for pr in predicted_profile(p)}[variant]
        want_order = 3
    F = witness_generator(p, variant if isinstance(p, ParamTriple) else None)
    observed = [list(h) for h in observed_profile(F)]
    expected = [list(h) for h in prof.diagonals]
    note = _profile_is_consistent(prof)
    ok = observed == expected and not note and nilpotency_order(F, X) == want_order
    if ok and isinstance(p, ParamTriple):
        ok = params_of_l3(F) == (p.r, p.s, p.t)
    elif ok:
        ok = params_of_l2(F) == (p.r, p.s)
    return SweepEntry(p.to_json(), variant, F.poly.to_text(aliases=True), expected, observed, ok, note)


def sweep_items(max_degree: int, min_degree: int = 2) -> list:
    items: list = []
    for d in range(min_degree, max_degree + 1):
        for p in valid_parameters_l3(d):
            items.extend((p, v) for v in p.variants)
        items.extend((p, UNIQUE) for p in valid_parameters_l2(d))
    return items


def verify_classification(max_degree: int, min_degree: int = 2, workers: int = 1) -> list[SweepEntry]:
    """Recompute every witness and compare with its predicted profile.

    Output order follows :func:`sweep_items` regardless of ``workers``.
    """
    _check_degree(max_degree)
    items = sweep_items(max_degree, min_degree)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_verify_one, items, chunksize=8))
    return [_verify_one(it) for it in items]


def default_workers() -> int:
    env = os.environ.get("GJ_THREADS")
    cap = os.cpu_count() or 1
    if env:
        try:
            cap = min(cap, max(1, int(env)))
        except ValueError:
            pass
    return cap


@dataclass(frozen=True)
class SmallPartReport:
    partition: Partition
    nilpotency_order: int
    params: tuple[int, ...]
    variant: str | None
    in_valid_list: bool
    dimensions: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "partition": list(self.partition),
            "nilpotency_order": self.nilpotency_order,
            "params": list(self.params),
            "variant": self.variant,
            "in_valid_list": self.in_valid_list,
            "dimensions": list(self.dimensions),
        }


def _hess(F, ell, a: int, b: int) -> int:
    """``rk Hess^(a, b)``, i.e. the rank of ``l^(d-b-a)`` from degree ``a`` to ``d - b``."""
    d = as_dual(F).degree
    return mixed_hessian_rank(F, ell, a, d - b)


def small_part_jordan_type(F: GeneratorLike, ell: LinearForm) -> SmallPartReport:
    """Jordan type of ``l`` from at most three mixed Hessian ranks, when ``l^4 o F = 0``.

    The parameters describe ``A^(1)`` (socle degree ``d - 1``) when ``l^3 o F != 0``
    and ``A^(1)`` in the role of the two-diagonal algebra when ``l^3 o F = 0``.
    """
    F = as_dual(F)
    if F.num_vars != 3 or ell.num_vars != 3:
        raise ValueError("the small-parts formula needs three variables")
    d = F.degree
    k = nilpotency_order(F, ell)
    if k > 4:
        raise ValueError(f"l^4 o F != 0 (nilpotency order {k})")
    dim_A = hilbert_function(F).dimension
    if k <= 1:
        return SmallPartReport(Partition([1] * dim_A), k, (), None, True, (dim_A,))
    if k == 2:
        i = (d - 1) // 2
        r = _hess(F, ell, i, d // 2)
        h1 = _symmetric(lambda j: j + 1 if j <= r - 1 else r, d - 1)
        dims = (dim_A, h1.dimension)
        member = any(p.r == r for p in valid_parameters_l2(d))
        return SmallPartReport(partition_from_dimensions(dims), k, (r,), None, member, dims)
    if k == 3:
        i = (d - 1) // 2
        r = mixed_hessian_rank(F, ell, i, i + 2)
        s = mixed_hessian_rank(F, ell, i, i + 1)
        prof = _profile_l2(d - 1, r, s)
        dims = (dim_A,) + prof.dimensions
        if d - 1 >= 2:
            member = ParamPair(d - 1, r, s, "") in valid_parameters_l2(d - 1)
        else:
            member = (r, s) == (1, 1)
        return SmallPartReport(partition_from_dimensions(dims), k, (r, s), None, member, dims)
    r = _hess(F, ell, d // 2 - 1, (d + 1) // 2 - 2)
    s = _hess(F, ell, d // 2 - 1, (d + 1) // 2 - 1)
    t = _hess(F, ell, (d - 1) // 2, d // 2)
    match = [p for p in valid_parameters_l3(d - 1) if (p.r, p.s, p.t) == (r, s, t)]
    if not match:
        raise ValueError(f"(r, s, t) = {(r, s, t)} is not admissible for socle degree {d - 1}")
    p = match[0]
    profiles = predicted_profile(p)
    variant = UNIQUE
    if p.is_t3r:
        key = _hess(F, ell, r, d - r - 1) - 3 * r
        variant = T3R_VARIANT_BY_RANK[key]
        profiles = tuple(pr for pr in profiles if pr.variant == variant)
    dims = (dim_A,) + profiles[0].dimensions
    return SmallPartReport(partition_from_dimensions(dims), k, (r, s, t), variant, True, dims)
