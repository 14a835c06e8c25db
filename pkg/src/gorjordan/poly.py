"""Sparse homogeneous polynomials over Q and the differentiation action.

Two polynomial rings share one representation:

* the operator ring ``S = Q[x1..xn]`` (lowercase variables), and
* the dual ring ``R = Q[X1..Xn]`` (uppercase variables), on which a monomial
  ``x^a`` of ``S`` acts as the partial derivative ``d^|a| / dX^a``.

A polynomial maps exponent tuples to non-zero ``Fraction`` coefficients; the
zero polynomial has no terms.  Terms are kept in graded-lex order with
``x1 > x2 > ... > xn``, the one monomial order used throughout the package.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

_ALIASES = ("x", "y", "z")


class Ring(str, enum.Enum):
    """Which side of the apolarity pairing a polynomial lives on."""

    S = "S"  # operators, lowercase variables
    R = "R"  # differentiated forms, uppercase variables


class PolynomialSyntaxError(ValueError):
    """Raised when polynomial text does not follow the grammar."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def _grlex_key(exp: Exponent) -> tuple:
    return (sum(exp), exp)


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("num_vars", "ring", "_terms", "_hash")

    def __init__(
        self,
        num_vars: int,
        terms: Mapping[Exponent, Scalar] | Iterable[tuple[Exponent, Scalar]] = (),
        ring: Ring = Ring.R,
    ):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[Exponent, Fraction] = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise ValueError(
                    f"exponent {exp} has length {len(exp)}, expected {num_vars}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            merged[exp] = merged.get(exp, Fraction(0)) + Fraction(coeff)
        ordered = sorted(
            ((e, c) for e, c in merged.items() if c != 0),
            key=lambda item: _grlex_key(item[0]),
            reverse=True,
        )
        self.num_vars = num_vars
        self.ring = Ring(ring)
        self._terms = dict(ordered)
        self._hash: int | None = None

    # construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int, ring: Ring = Ring.R) -> "Polynomial":
        return cls(num_vars, (), ring)

    @classmethod
    def monomial(
        cls, exp: Exponent, coeff: Scalar = 1, ring: Ring = Ring.R
    ) -> "Polynomial":
        return cls(len(exp), {tuple(exp): coeff}, ring)

    @classmethod
    def variable(cls, index: int, num_vars: int, ring: Ring = Ring.R) -> "Polynomial":
        """The variable with 0-based ``index``."""
        exp = [0] * num_vars
        exp[index] = 1
        return cls(num_vars, {tuple(exp): 1}, ring)

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        """Largest total degree of a term, ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    @property
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # arithmetic ---------------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError("polynomials have different numbers of variables")
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        return Polynomial(
            self.num_vars, list(self._terms.items()) + list(other._terms.items()), self.ring
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.num_vars, {e: -c for e, c in self._terms.items()}, self.ring)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(
                self.num_vars, {e: c * other for e, c in self._terms.items()}, self.ring
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_compatible(other)
        out: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return Polynomial(self.num_vars, out, self.ring)

    def __rmul__(self, other: Scalar) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial(self.num_vars, {(0,) * self.num_vars: 1}, self.ring)
        for _ in range(k):
            result = result * self
        return result

    # identity -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and self.ring == other.ring
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, self.ring, frozenset(self._terms.items())))
        return self._hash

    # printing -----------------------------------------------------------

    def to_text(self, aliases: bool = False) -> str:
        """Canonical text form, parseable by :func:`parse_polynomial`.

        With ``aliases=True`` and three variables the names ``X, Y, Z`` (or
        ``x, y, z``) replace the indexed names.
        """
        if not self._terms:
            return "0"
        upper = self.ring is Ring.R
        if aliases and self.num_vars == 3:
            names = [a.upper() if upper else a for a in _ALIASES]
        else:
            base = "X" if upper else "x"
            names = [f"{base}{i + 1}" for i in range(self.num_vars)]
        pieces = []
        for k, (exp, coeff) in enumerate(self._terms.items()):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exp)
                if e
            ]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if k == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r}, num_vars={self.num_vars}, ring={self.ring.value})"


@dataclass(frozen=True)
class LinearForm:
    """A linear form ``c1*x1 + ... + cn*xn`` of the operator ring ``S``.

    The zero form is allowed; it acts on every algebra as the zero map.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a linear form needs at least one coefficient")
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @classmethod
    def variable(cls, index: int, num_vars: int) -> "LinearForm":
        coeffs = [0] * num_vars
        coeffs[index] = 1
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, num_vars: int) -> "LinearForm":
        return cls((0,) * num_vars)

    @property
    def num_vars(self) -> int:
        return len(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def to_polynomial(self) -> Polynomial:
        n = self.num_vars
        return Polynomial(
            n,
            ((tuple(int(i == k) for i in range(n)), c) for k, c in enumerate(self.coefficients)),
            Ring.S,
        )

    def to_text(self, aliases: bool = False) -> str:
        return self.to_polynomial().to_text(aliases)

    def __str__(self) -> str:
        return self.to_text()


# differentiation ---------------------------------------------------------


def _falling(b: int, a: int) -> int:
    """b (b-1) ... (b-a+1): the a-th derivative coefficient of X^b."""
    return math.perm(b, a)


def apply_operator(op: Polynomial, target: Polynomial) -> Polynomial:
    """Return ``op o target``: ``op`` acting on ``target`` by differentiation."""
    if op.ring is not Ring.S or target.ring is not Ring.R:
        raise ValueError(
            "apply_operator needs an S-ring operator and an R-ring target, "
            f"got {op.ring.value} and {target.ring.value}"
        )
    if op.num_vars != target.num_vars:
        raise ValueError("operator and target have different numbers of variables")
    out: dict[Exponent, Fraction] = {}
    for alpha, ca in op:
        for beta, cb in target:
            coeff = 1
            for a, b in zip(alpha, beta):
                if a > b:
                    break
                coeff *= _falling(b, a)
            else:
                exp = tuple(b - a for a, b in zip(alpha, beta))
                out[exp] = out.get(exp, Fraction(0)) + ca * cb * coeff
    return Polynomial(target.num_vars, out, Ring.R)


def _as_operator(ell: LinearForm | Polynomial) -> Polynomial:
    if isinstance(ell, LinearForm):
        return ell.to_polynomial()
    return ell


def linear_power_derivative(
    ell: LinearForm | Polynomial, k: int, F: Polynomial
) -> Polynomial:
    """``ell^k o F`` computed as ``k`` successive applications of ``ell``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    op = _as_operator(ell)
    result = F
    for _ in range(k):
        if result.is_zero:
            break
        result = apply_operator(op, result)
    return result


@lru_cache(maxsize=None)
def monomial_basis(num_vars: int, degree: int) -> tuple[Exponent, ...]:
    """All exponent vectors of the given total degree, graded-lex descending."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if num_vars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomial_basis(num_vars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


def monomial_factorial(exp: Exponent) -> int:
    """``prod(e_i!)``, the value of ``x^e o X^e``."""
    out = 1
    for e in exp:
        out *= math.factorial(e)
    return out


# parsing -----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, num_vars: int):
        self.text = text
        self.pos = 0
        self.num_vars = num_vars
        self.case: str | None = None  # "lower" / "upper"
        self.style: str | None = None  # "indexed" / "alias"

    def error(self, message: str, pos: int | None = None) -> PolynomialSyntaxError:
        return PolynomialSyntaxError(message, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start : self.pos])

    def variable(self) -> int:
        self.skip_ws()
        start = self.pos
        ch = self.text[self.pos]
        self.pos += 1
        case = "upper" if ch.isupper() else "lower"
        if self.case is None:
            self.case = case
        elif self.case != case:
            raise self.error("mixed lowercase and uppercase variables", start)
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if ch in "xX" and self.pos > digits_start:
            style = "indexed"
            index = int(self.text[digits_start : self.pos])
            if not 1 <= index <= self.num_vars:
                raise self.error(
                    f"variable index {index} out of range 1..{self.num_vars}", start
                )
            index -= 1
        else:
            if self.pos > digits_start:
                raise self.error(f"unknown variable {self.text[start:self.pos]!r}", start)
            style = "alias"
            if self.num_vars != 3:
                raise self.error("x, y, z aliases need exactly 3 variables", start)
            index = _ALIASES.index(ch.lower())
        if self.style is None:
            self.style = style
        elif self.style != style:
            raise self.error("mixed indexed and x/y/z variable names", start)
        return index

    def factor(self, exp: list[int]) -> None:
        index = self.variable()
        power = 1
        if self.peek() == "^":
            self.pos += 1
            power = self.integer()
        exp[index] += power

    def term(self) -> tuple[Exponent, Fraction]:
        coeff = Fraction(1)
        exp = [0] * self.num_vars
        ch = self.peek()
        if ch.isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self.integer()
                if den == 0:
                    raise self.error("zero denominator", den_pos)
            coeff = Fraction(num, den)
            if self.peek() == "*":
                self.pos += 1
                if not self._at_variable():
                    raise self.error("expected a variable after '*'")
            elif not self._at_variable():
                return tuple(exp), coeff
        elif not self._at_variable():
            raise self.error("expected a coefficient or a variable")
        while True:
            self.factor(exp)
            if self.peek() == "*":
                self.pos += 1
                if not self._at_variable():
                    raise self.error("expected a variable after '*'")
                continue
            break
        return tuple(exp), coeff

    def _at_variable(self) -> bool:
        ch = self.peek()
        return ch != "" and ch in "xyzXYZ"

    def parse(self) -> list[tuple[Exponent, Fraction]]:
        terms = []
        sign = 1
        ch = self.peek()
        if ch and ch in "+-":
            sign = -1 if ch == "-" else 1
            self.pos += 1
        while True:
            exp, coeff = self.term()
            terms.append((exp, sign * coeff))
            ch = self.peek()
            if ch == "":
                return terms
            if ch not in "+-":
                raise self.error(f"unexpected character {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1


def parse_polynomial(text: str, num_vars: int, default_ring: Ring = Ring.R) -> Polynomial:
    """Parse text such as ``"3/2*X1^2*X2 - X3^3"`` into a :class:`Polynomial`.

    Variables are ``x1..xn`` (or ``x, y, z`` when ``num_vars == 3``); lowercase
    selects the operator ring ``S``, uppercase the dual ring ``R``.  Text without
    any variable takes ``default_ring``.
    """
    if num_vars < 1:
        raise ValueError("num_vars must be positive")
    if not text.strip():
        raise PolynomialSyntaxError("empty polynomial", 0)
    parser = _Parser(text, num_vars)
    terms = parser.parse()
    if parser.case is None:
        ring = default_ring
    else:
        ring = Ring.S if parser.case == "lower" else Ring.R
    return Polynomial(num_vars, terms, ring)


def parse_linear_form(text: str, num_vars: int) -> LinearForm:
    """Parse a linear form of ``S`` such as ``"x1 + 2*x3"``; ``"0"`` is the zero form."""
    poly = parse_polynomial(text, num_vars, default_ring=Ring.S)
    if poly.is_zero:
        return LinearForm.zero(num_vars)
    if poly.ring is not Ring.S:
        raise PolynomialSyntaxError("a linear form uses lowercase variables")
    if not poly.is_homogeneous or poly.degree != 1:
        raise PolynomialSyntaxError("a linear form must be homogeneous of degree 1")
    coeffs = [Fraction(0)] * num_vars
    for exp, c in poly:
        coeffs[exp.index(1)] = c
    return LinearForm(tuple(coeffs))
