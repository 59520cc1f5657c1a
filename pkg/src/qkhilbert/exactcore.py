"""Exact rational scalars, dense univariate polynomials, binomials and
Bernoulli polynomials.

Scalars are :class:`fractions.Fraction`; they are always in lowest terms
with a positive denominator, so no separate rational type is needed.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x) -> str:
    """Canonical "p/q" string; integers are written without a denominator."""
    x = as_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class UniPoly:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are
    trimmed, so the zero polynomial has an empty coefficient tuple and
    degree :data:`UniPoly.ZERO_DEGREE`.
    """

    ZERO_DEGREE = -math.inf
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, a, b) -> "UniPoly":
        """``a*x + b``."""
        return cls([b, a])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "UniPoly":
        p = cls.constant(lead)
        for rt in roots:
            p = p * cls([-as_fraction(rt), 1])
        return p

    # -- structure ---------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else self.ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _lift(other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = as_fraction(other)
            return UniPoly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, UniPoly):
            raise TypeError("polynomial division is not supported; divide by a scalar")
        c = as_fraction(other)
        return UniPoly(a / c for a in self.coeffs)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = UniPoly.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- evaluation / composition -----------------------------------------

    def __call__(self, x):
        if isinstance(x, UniPoly):
            return self.compose(x)
        return self.evaluate(x)

    def evaluate(self, x) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """``self(inner(x))`` by Horner's scheme."""
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c) -> "UniPoly":
        """``self(x + c)``."""
        return self.compose(UniPoly.linear(1, c))

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __repr__(self):
        return f"UniPoly({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = format_rational(abs(c)) + ("*" + mono if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def binomial(a, b: int):
    """Generalized binomial coefficient ``a(a-1)...(a-b+1)/b!``.

    ``a`` may be an integer, a rational or a :class:`UniPoly`; the result
    has the same kind.
    """
    if b < 0:
        raise ValueError("b must be non-negative")
    if isinstance(a, UniPoly):
        out = UniPoly.constant(1)
        for i in range(b):
            out = out * (a - i)
        return out / math.factorial(b)
    if isinstance(a, int) and a >= 0:
        return math.comb(a, b)
    a = as_fraction(a)
    num = Fraction(1)
    for i in range(b):
        num *= a - i
    out = num / math.factorial(b)
    return out.numerator if out.denominator == 1 else out


@lru_cache(maxsize=None)
def bernoulli_number(m: int) -> Fraction:
    """B_m with the convention B_1 = -1/2."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m == 0:
        return Fraction(1)
    # sum_{j<m+1} C(m+1, j) B_j = 0
    s = sum(math.comb(m + 1, j) * bernoulli_number(j) for j in range(m))
    return -s / (m + 1)


@lru_cache(maxsize=None)
def bernoulli_poly(m: int) -> UniPoly:
    """The Bernoulli polynomial ``B_m(x) = sum_j C(m, j) B_j x^(m-j)``.

    Satisfies ``B_m(x+1) - B_m(x) = m x^(m-1)``; ``B_1(x) = x - 1/2``.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    coeffs = [Fraction(0)] * (m + 1)
    for j in range(m + 1):
        coeffs[m - j] = math.comb(m, j) * bernoulli_number(j)
    return UniPoly(coeffs)


def lagrange_interpolate(points: Sequence[tuple]) -> UniPoly:
    """The unique polynomial of degree < len(points) through ``points``."""
    xs = [as_fraction(x) for x, _ in points]
    out = UniPoly()
    for i, (_, yi) in enumerate(points):
        basis = UniPoly.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UniPoly([-xj, 1])
                denom *= xs[i] - xj
        out = out + basis * (as_fraction(yi) / denom)
    return out


def binomial_basis_coeffs(p: UniPoly) -> list[Fraction]:
    """Coefficients ``n_i`` with ``p(r) = sum_i n_i C(r, i)``.

    Computed as iterated forward differences of ``p`` at 0.
    """
    if p.is_zero():
        return []
    values = [p.evaluate(i) for i in range(p.degree + 1)]
    out = []
    while values:
        out.append(values[0])
        values = [b - a for a, b in zip(values, values[1:])]
    return out
