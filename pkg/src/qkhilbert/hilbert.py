"""Hilbert polynomials of the Wolf spaces and their derived invariants.

For the Wolf space of a simple Lie algebra with highest root ``theta`` the
Hilbert polynomial is the dimension of the irreducible representation with
highest weight ``r * theta``; with ``<theta, theta> = 1`` this is

    P(r) = (n + 1 + 2r)/(n + 1) * prod_{mu in level 1/2} (1 + 2r / (4 <rho, mu>)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactcore import (
    UniPoly,
    bernoulli_poly,
    binomial,
    binomial_basis_coeffs,
    format_rational,
)
from .rootsys import (
    RootSystem,
    WolfGrading,
    casimir,
    dot,
    scale,
    weyl_dim,
    wolf_grading,
)

FAMILIES = ("HPn", "Gr2C", "Gr4R", "G2")


class HilbertMismatch(RuntimeError):
    """The product formula disagrees with the Weyl dimension formula."""


class SymmetryError(ValueError):
    """A polynomial is not antisymmetric under ``r -> -r - n - 1``."""

    def __init__(self, residual: UniPoly):
        super().__init__(f"P(r) + P(-r-n-1) = {residual} is not zero")
        self.residual = residual


@dataclass
class Check:
    name: str
    passed: bool
    detail: Any = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": "pass" if self.passed else "fail"}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


@dataclass
class HilbertReport:
    algebra: tuple[str, int]
    n: int
    P: UniPoly
    volume: Fraction
    twistor_degree: Fraction
    char_coeffs: list[Fraction]
    lie_algebra_dim: int
    degenerate: bool = False
    checks: list[Check] = field(default_factory=list)

    @property
    def name(self) -> str:
        return f"{self.algebra[0]}{self.algebra[1]}"

    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def wolf_product(grading: WolfGrading) -> UniPoly:
    """The product formula as an exact polynomial in ``r``."""
    theta, n = grading.wolf_root, grading.quaternionic_dim
    tt = dot(theta, theta)
    rho = grading.rho
    p = UniPoly.linear(Fraction(2, n + 1), 1)
    for mu in grading.half_level:
        # <rho, mu> in the scaling where <theta, theta> = 1
        rm = dot(rho, mu) / tt
        p = p * UniPoly.linear(Fraction(2) / (4 * rm), 1)
    return p


def hilbert_poly(rs: RootSystem, grading: WolfGrading | None = None) -> HilbertReport:
    g = grading or wolf_grading(rs)
    n = g.quaternionic_dim
    P = wolf_product(g)
    for r in range(0, 2 * n + 4):
        expected = weyl_dim(scale(r, g.wolf_root), g.ordered)
        got = P.evaluate(r)
        if got != expected:
            raise HilbertMismatch(
                f"{rs.name}: product formula gives P({r}) = {got}, Weyl formula {expected}")
    volume = quaternionic_volume(P, n)
    chars = bernoulli_expand(P, n)
    return HilbertReport(
        algebra=(rs.type_label, rs.rank), n=n, P=P, volume=volume,
        twistor_degree=2 * volume, char_coeffs=chars,
        lie_algebra_dim=rs.lie_algebra_dim, degenerate=g.degenerate)


def hp_poly(n: int) -> UniPoly:
    """C(2n+1+2r, 2n+1)."""
    return binomial(UniPoly.linear(2, 2 * n + 1), 2 * n + 1)


def closed_form(family: str, n: int) -> UniPoly:
    r = UniPoly.x()
    if family == "HPn":
        if n < 1:
            raise ValueError("HPn requires n >= 1")
        return hp_poly(n)
    if family == "Gr2C":
        if n < 1:
            raise ValueError("Gr2C requires n >= 1")
        return (r * 2 + (n + 1)) / (n + 1) * binomial(r + n, n) ** 2
    if family == "Gr4R":
        if n < 1:
            raise ValueError("Gr4R requires n >= 1")
        cubic = (r * 2 + n) * (r * 2 + n + 1) * (r * 2 + n + 2)
        return (cubic / (n * n * (n + 1) * (n + 2))
                * binomial(r + n, n - 1) * binomial(r + n - 1, n - 1))
    if family == "G2":
        if n != 2:
            raise ValueError("G2 family exists only for n = 2")
        return (r + 2) * (r * 3 + 5) * (r * 2 + 3) * (r * 3 + 4) * (r + 1) / 120
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_algebra(family: str, n: int) -> tuple[str, int]:
    """The simple Lie algebra whose Wolf space is the family member."""
    if family == "HPn":
        return ("C", n + 1)
    if family == "Gr2C":
        return ("A", n + 1)
    if family == "Gr4R":
        return ("B", (n + 3) // 2) if n % 2 else ("D", (n + 4) // 2)
    if family == "G2":
        return ("G", 2)
    raise ValueError(f"unknown family {family!r}")


def quaternionic_volume(P: UniPoly, n: int, strict: bool = False) -> Fraction:
    """``v(M)`` from the leading coefficient; the r^(2n) coefficient must be
    ``(n+1)/(2n)! v``."""
    if P.degree != 2 * n + 1:
        raise ValueError(f"degree {P.degree} does not match 2n+1 = {2 * n + 1}")
    v = P.leading_coefficient() * math.factorial(2 * n + 1) / 2
    sub = P.coefficient(2 * n)
    expected = Fraction(n + 1, math.factorial(2 * n)) * v
    if sub != expected and strict:
        raise ValueError(f"subleading coefficient {sub} != (n+1)/(2n)! v = {expected}")
    return v


def subleading_ok(P: UniPoly, n: int) -> bool:
    v = quaternionic_volume(P, n)
    return P.coefficient(2 * n) == Fraction(n + 1, math.factorial(2 * n)) * v


def bernoulli_basis(n: int) -> list[UniPoly]:
    """``f_l(r) = 2/(2l+1)! B_{2l+1}(r + n/2 + 1)`` for ``l = 0..n``."""
    c = Fraction(n, 2) + 1
    return [bernoulli_poly(2 * l + 1).shift(c) * Fraction(2, math.factorial(2 * l + 1))
            for l in range(n + 1)]


def symmetry_residual(P: UniPoly, n: int) -> UniPoly:
    return P + P.compose(UniPoly.linear(-1, -(n + 1)))


def bernoulli_expand(P: UniPoly, n: int) -> list[Fraction]:
    """Coordinates of ``P`` in :func:`bernoulli_basis`."""
    res = symmetry_residual(P, n)
    if not res.is_zero():
        raise SymmetryError(res)
    if not P.is_zero() and P.degree > 2 * n + 1:
        raise ValueError("degree exceeds 2n+1")
    basis = bernoulli_basis(n)
    rest = P
    coeffs = [Fraction(0)] * (n + 1)
    for l in range(n, -1, -1):
        c = rest.coefficient(2 * l + 1) / basis[l].coefficient(2 * l + 1)
        coeffs[l] = c
        rest = rest - basis[l] * c
    if not rest.is_zero():
        raise SymmetryError(rest)
    return coeffs


def bernoulli_reconstruct(coeffs, n: int) -> UniPoly:
    out = UniPoly()
    for c, f in zip(coeffs, bernoulli_basis(n)):
        out = out + f * c
    return out


def chern_character_coeff(k: int, l: int) -> Fraction:
    """Coefficient of ``u^l`` in ``ch Sym^k H``, via Bernoulli polynomials."""
    return Fraction(2 ** (2 * l + 1), math.factorial(2 * l + 1)) \
        * bernoulli_poly(2 * l + 1).evaluate(Fraction(k, 2) + 1)


def power_sum(k: int, l: int) -> Fraction:
    """The same coefficient summed over the weights ``k, k-2, ..., -k``."""
    return Fraction(sum((k - 2 * nu) ** (2 * l) for nu in range(k + 1)), math.factorial(2 * l))


@dataclass(frozen=True)
class SpectralParams:
    n: int
    kappa: Fraction
    r: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.kappa <= 0:
            raise ValueError("kappa must be positive")


def lambda_min(sp: SpectralParams) -> Fraction:
    """Lower bound ``kappa r (n+1+r) / (2n(n+2))`` of the spectrum on Sym^{2r}H."""
    n = sp.n
    return Fraction(sp.kappa) * sp.r * (n + 1 + sp.r) / (2 * n * (n + 2))


def phi(sp: SpectralParams, l: int, d: int) -> Fraction:
    n = sp.n
    return Fraction(sp.kappa) * (l + d - n) * (l - d + n + 2) / (8 * n * (n + 2))


def killing_lambda_min(grading: WolfGrading, r: int) -> tuple[Fraction, Fraction]:
    """``(lambda_{2r} at kappa = 2n, Cas(r theta) in Killing scaling)``."""
    n = grading.quaternionic_dim
    lam = lambda_min(SpectralParams(n, Fraction(2 * n), r))
    cas = casimir(scale(r, grading.wolf_root), grading.ordered, "killing")
    return lam, cas


def _is_type_c(rep: HilbertReport) -> bool:
    # HP^n: C_l, and the isomorphic B2 and A1
    return rep.algebra[0] == "C" or rep.algebra in (("B", 2), ("A", 1))


def verify_report(rep: HilbertReport, r_max: int = 20) -> list[Check]:
    P, n = rep.P, rep.n
    checks = []
    checks.append(Check("degree", P.degree == 2 * n + 1, {"degree": P.degree}))
    checks.append(Check("P0_is_1", P.evaluate(0) == 1, {"P0": format_rational(P.evaluate(0))}))
    p1 = P.evaluate(1)
    checks.append(Check("P1_is_dim_g", p1 == rep.lie_algebra_dim,
                        {"P1": format_rational(p1), "dim_g": rep.lie_algebra_dim}))
    res = symmetry_residual(P, n)
    checks.append(Check("symmetry", res.is_zero(),
                        None if res.is_zero() else {"residual": str(res)}))
    bad = [r for r in range(-r_max, r_max + 1) if P.evaluate(r).denominator != 1]
    checks.append(Check("integer_valued", not bad, {"counterexample": bad[0]} if bad else None))
    nis = binomial_basis_coeffs(P)
    checks.append(Check("binomial_basis_integral", all(c.denominator == 1 for c in nis)))
    viol = []
    for r in range(0, r_max + 1):
        v = P.evaluate(r)
        if not 0 <= v <= math.comb(2 * n + 1 + 2 * r, 2 * n + 1):
            viol.append(r)
    checks.append(Check("main_bound", not viol, {"counterexample": viol[0]} if viol else None))
    hp = hp_poly(n) if n >= 1 else UniPoly.linear(2, 1)
    is_hp = P == hp
    checks.append(Check("bound_equality_iff_HPn", is_hp == _is_type_c(rep), {"equal_to_HPn": is_hp}))
    checks.append(Check("volume_bound", rep.volume <= 4 ** n and (rep.volume == 4 ** n) == is_hp,
                        {"volume": format_rational(rep.volume), "HPn_volume": 4 ** n}))
    checks.append(Check("isometry_bound", p1 <= (n + 1) * (2 * n + 3)
                        and (p1 == (n + 1) * (2 * n + 3)) == is_hp))
    checks.append(Check("degree_bound",
                        rep.twistor_degree * (n + 1) ** (2 * n + 1)
                        <= Fraction(2 ** (2 * n + 1) * (n + 1) ** (2 * n + 1)),
                        {"c1_power": format_rational(rep.twistor_degree * (n + 1) ** (2 * n + 1))}))
    checks.append(Check("twistor_degree_is_2v", rep.twistor_degree == 2 * rep.volume))
    checks.append(Check("subleading_coefficient", n >= 0 and subleading_ok(P, n)))
    rt = bernoulli_reconstruct(rep.char_coeffs, n) == P
    checks.append(Check("bernoulli_round_trip", rt and rep.char_coeffs[-1] == rep.volume))
    if _is_type_c(rep) and n >= 1:
        zs = [Fraction(-j, 2) for j in range(1, n + 1)]
        nonzero = [format_rational(z) for z in zs if P.evaluate(z) != 0]
        checks.append(Check("HPn_half_integer_zeroes", not nonzero,
                            {"nonzero_at": nonzero} if nonzero else None))
    rep.checks = checks
    return checks
