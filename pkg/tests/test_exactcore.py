import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qkhilbert.exactcore import (
    UniPoly,
    as_fraction,
    bernoulli_number,
    bernoulli_poly,
    binomial,
    binomial_basis_coeffs,
    format_rational,
    lagrange_interpolate,
)

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 100)
polys = st.lists(rationals, max_size=6).map(UniPoly)
X = UniPoly.x()


def test_format_rational():
    assert format_rational(Fraction(3, 20)) == "3/20"
    assert format_rational(Fraction(-7, 1)) == "-7"
    assert format_rational(0) == "0"


def test_as_fraction_rejects_float():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction("2/6") == Fraction(1, 3)


def test_trailing_zeros_dropped():
    p = UniPoly([1, 2, 0, 0])
    assert p.degree == 1
    assert p == UniPoly([1, 2])
    assert UniPoly().is_zero()
    assert UniPoly().degree == -math.inf


def test_bernoulli_numbers():
    known = {0: 1, 1: Fraction(-1, 2), 2: Fraction(1, 6), 4: Fraction(-1, 30),
             6: Fraction(1, 42), 8: Fraction(-1, 30), 10: Fraction(5, 66), 12: Fraction(-691, 2730)}
    for m, b in known.items():
        assert bernoulli_number(m) == b
    assert all(bernoulli_number(m) == 0 for m in range(3, 20, 2))


@pytest.mark.parametrize("m", range(1, 13))
def test_bernoulli_difference_equation(m):
    # B_m(x + 1) - B_m(x) = m x^(m-1)
    B = bernoulli_poly(m)
    assert B.shift(1) - B == X ** (m - 1) * m


@pytest.mark.parametrize("m", range(0, 13))
def test_bernoulli_reflection(m):
    # B_m(1 - x) = (-1)^m B_m(x), checked on the integers -5..5
    B = bernoulli_poly(m)
    for w in range(-5, 6):
        assert B.evaluate(1 - w) == (-1) ** m * B.evaluate(w)


def test_bernoulli_power_sums():
    # sum_{j<N} j^k = (B_{k+1}(N) - B_{k+1}(0)) / (k+1)
    for k in range(8):
        B = bernoulli_poly(k + 1)
        for N in range(8):
            assert sum(j ** k for j in range(N)) == (B.evaluate(N) - B.evaluate(0)) / (k + 1)


def test_B3_shift_value():
    assert bernoulli_poly(3).compose(X + Fraction(3, 2)).evaluate(0) == Fraction(3, 4)


def test_binomial_of_linear_poly():
    p = binomial(2 * X + 3, 3)
    assert p == UniPoly([1, Fraction(11, 3), 4, Fraction(4, 3)])
    assert [p.evaluate(r) for r in range(4)] == [1, 10, 35, 84]


def test_binomial_rational_and_negative():
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binomial(-1, 3) == -1
    assert binomial(7, 3) == 35
    assert binomial(3, 5) == 0
    with pytest.raises(ValueError):
        binomial(3, -1)


def test_binomial_basis_of_binomials():
    p = binomial(X, 4)
    assert binomial_basis_coeffs(p) == [0, 0, 0, 0, 1]


@given(polys, polys, rationals)
def test_ring_laws_pointwise(p, q, x):
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x)


@given(polys, polys, rationals)
def test_compose_pointwise(p, q, x):
    assert p.compose(q).evaluate(x) == p.evaluate(q.evaluate(x))


@given(polys, rationals)
def test_derivative_product_rule(p, c):
    q = X + c
    assert (p * q).derivative() == p.derivative() * q + p


@given(polys)
def test_interpolation_recovers(p):
    pts = [(i, p.evaluate(i)) for i in range(max(p.degree, 0) + 1)]
    assert lagrange_interpolate(pts) == p


@given(polys)
@settings(max_examples=50)
def test_binomial_basis_round_trip(p):
    coeffs = binomial_basis_coeffs(p)
    back = UniPoly()
    for i, c in enumerate(coeffs):
        back = back + binomial(X, i) * c
    assert back == p
