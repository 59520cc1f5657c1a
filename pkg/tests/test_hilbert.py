import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qkhilbert import hilbert
from qkhilbert.exactcore import UniPoly, binomial
from qkhilbert.hilbert import (
    HilbertMismatch,
    SpectralParams,
    SymmetryError,
    bernoulli_basis,
    bernoulli_expand,
    bernoulli_reconstruct,
    chern_character_coeff,
    closed_form,
    family_algebra,
    hilbert_poly,
    lambda_min,
    phi,
    power_sum,
    quaternionic_volume,
    verify_report,
)
from qkhilbert.rootsys import admissible_algebras, build_root_system, wolf_grading

X = UniPoly.x()

# volumes frozen from independent runs of the product formula
FROZEN_VOLUMES = {
    ("G", 2): 9, ("F", 4): 2496, ("E", 6): 75582, ("E", 7): 70715340,
    ("E", 8): 63468758442600,
}


def report(label, rank):
    return hilbert_poly(build_root_system(label, rank))


def test_g2_polynomial():
    rep = report("G", 2)
    expected = (X + 2) * (3 * X + 5) * (2 * X + 3) * (3 * X + 4) * (X + 1) / 120
    assert rep.P == expected
    assert rep.P.evaluate(1) == 14
    assert rep.P.leading_coefficient() == Fraction(3, 20)
    assert rep.volume == 9
    assert rep.twistor_degree == 18


@pytest.mark.parametrize("n", range(1, 7))
def test_type_c_is_hpn(n):
    rep = report("C", n + 1)
    assert rep.P == binomial(2 * X + 2 * n + 1, 2 * n + 1)
    assert rep.volume == 4 ** n
    assert rep.P.evaluate(1) == (n + 1) * (2 * n + 3)
    for j in range(1, n + 1):
        assert rep.P.evaluate(Fraction(-j, 2)) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_grassmannians(n):
    a = hilbert_poly(build_root_system(*family_algebra("Gr2C", n)))
    assert a.P == closed_form("Gr2C", n)
    assert a.volume == math.comb(2 * n + 1, n)
    assert a.P.evaluate(1) == (n + 2) ** 2 - 1
    b = hilbert_poly(build_root_system(*family_algebra("Gr4R", n)))
    assert b.P == closed_form("Gr4R", n)
    assert b.volume == Fraction(4, n + 2) * math.comb(2 * n + 1, n)
    m = n + 4
    assert b.P.evaluate(1) == m * (m - 1) // 2


def test_family_algebra_mapping():
    assert family_algebra("Gr4R", 1) == ("B", 2)
    assert family_algebra("Gr4R", 2) == ("D", 3)
    assert family_algebra("Gr4R", 4) == ("D", 4)
    with pytest.raises(ValueError):
        family_algebra("nope", 1)
    with pytest.raises(ValueError):
        closed_form("G2", 3)


@pytest.mark.parametrize("key", sorted(FROZEN_VOLUMES))
def test_exceptional_volumes(key):
    assert report(*key).volume == FROZEN_VOLUMES[key]


def test_isogenies():
    assert report("B", 2).P == report("C", 2).P
    assert report("D", 3).P == report("A", 3).P


def test_a1_degenerate():
    rep = report("A", 1)
    assert rep.degenerate and rep.n == 0
    assert rep.P == 2 * X + 1
    assert all(c.passed for c in verify_report(rep))


@pytest.mark.parametrize("key", admissible_algebras(5))
def test_verify_report_passes(key):
    rep = report(*key)
    checks = verify_report(rep, r_max=12)
    assert [c.name for c in checks if not c.passed] == []


def test_mismatch_is_detected(monkeypatch):
    real = hilbert.wolf_product
    monkeypatch.setattr(hilbert, "wolf_product", lambda g: real(g) + X * X)
    with pytest.raises(HilbertMismatch):
        report("A", 3)


def test_volume_strict_subleading():
    P = closed_form("HPn", 2)
    assert quaternionic_volume(P, 2, strict=True) == 16
    with pytest.raises(ValueError):
        quaternionic_volume(P + X ** 4, 2, strict=True)
    with pytest.raises(ValueError):
        quaternionic_volume(P, 3)


def test_bernoulli_basis_antisymmetry():
    for n in range(0, 6):
        for f in bernoulli_basis(n):
            assert f + f.compose(-X - (n + 1)) == UniPoly()


def test_bernoulli_hp1():
    assert bernoulli_expand(closed_form("HPn", 1), 1) == [0, 4]


def test_bernoulli_rejects_asymmetric():
    with pytest.raises(SymmetryError) as err:
        bernoulli_expand(X * X, 1)
    assert not err.value.residual.is_zero()


@given(st.integers(0, 5), st.lists(st.fractions(max_denominator=30), min_size=6, max_size=6))
def test_bernoulli_round_trip_random(n, cs):
    cs = cs[: n + 1]
    P = bernoulli_reconstruct(cs, n)
    assert bernoulli_expand(P, n) == cs


@pytest.mark.parametrize("key", [("G", 2), ("F", 4), ("B", 4), ("A", 5)])
def test_char_coeff_top_is_volume(key):
    rep = report(*key)
    assert rep.char_coeffs[-1] == rep.volume
    assert bernoulli_reconstruct(rep.char_coeffs, rep.n) == rep.P


def test_chern_character_power_sum():
    for k in range(11):
        for l in range(7):
            assert chern_character_coeff(k, l) == power_sum(k, l)


def test_spectral_identity():
    for n in range(1, 7):
        for r in range(7):
            for kappa in (Fraction(1), Fraction(2 * n), Fraction(9, 4)):
                sp = SpectralParams(n, kappa, r)
                assert phi(sp, n + 2 * r, 0) == lambda_min(sp)
    with pytest.raises(ValueError):
        SpectralParams(0, Fraction(1), 1)
    with pytest.raises(ValueError):
        SpectralParams(1, Fraction(0), 1)


@pytest.mark.parametrize("key", [("C", 3), ("G", 2), ("F", 4), ("D", 5)])
def test_killing_spectral(key):
    g = wolf_grading(build_root_system(*key))
    for r in range(5):
        lam, cas = hilbert.killing_lambda_min(g, r)
        assert lam == cas
