"""Verification grids shared by the ``verify`` command.

Every entry point returns a list of :class:`~qkhilbert.hilbert.Check`; an
exception raised while checking one cell is turned into a failing check
named after the stage that raised it.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .exactcore import format_rational
from .hilbert import (
    FAMILIES,
    Check,
    SpectralParams,
    bernoulli_expand,
    chern_character_coeff,
    closed_form,
    family_algebra,
    hilbert_poly,
    killing_lambda_min,
    lambda_min,
    phi,
    power_sum,
    verify_report,
)
from .prolong.symbols import TwistorSymbolSpec, divergence_symbol, twistor_symbol
from .prolong.tower import (
    build_I_maps,
    check_partial_inverse,
    polynomial_solution_space,
    prolongation_tower,
    unitriangular_ok,
    verify_prolongation_lemma,
)
from .rootsys import RootSystem, admissible_algebras, build_root_system, wolf_grading

PROLONG_GRID = ((1, 1), (1, 2), (1, 3), (2, 1), (2, 2))


def algebra_checks(rs: RootSystem, r_max: int = 20) -> list[Check]:
    name = rs.name
    try:
        grading = wolf_grading(rs)
    except Exception as exc:  # reported, not raised
        return [Check(f"{name}/wolf_grading", False, {"error": str(exc)})]
    try:
        rep = hilbert_poly(rs, grading)
    except Exception as exc:
        return [Check(f"{name}/hilbert_poly", False, {"error": str(exc)})]
    out = [Check(f"{name}/{c.name}", c.passed, c.detail) for c in verify_report(rep, r_max)]
    n = grading.quaternionic_dim
    if n >= 1:
        lam, cas = killing_lambda_min(grading, 3)
        out.append(Check(f"{name}/killing_casimir", lam == cas,
                         {"lambda_min": format_rational(lam), "casimir": format_rational(cas)}))
    return out


def _algebra_cell(args) -> list[Check]:
    (label, rank), r_max, override = args
    rs = override if override is not None else build_root_system(label, rank)
    return algebra_checks(rs, r_max)


def hilbert_suite(r_max: int = 20, overrides: dict | None = None,
                  jobs: int = 1) -> list[Check]:
    """All admissible algebras of rank <= 8, the closed forms and the
    Bernoulli/Chern and spectral identities."""
    overrides = overrides or {}
    cells = [(key, r_max, overrides.get(key)) for key in admissible_algebras(8)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_algebra_cell, cells))
    else:
        results = [_algebra_cell(c) for c in cells]
    out = [c for cell in results for c in cell]

    for family in FAMILIES:
        ns = [2] if family == "G2" else range(1, 7)
        for n in ns:
            key = family_algebra(family, n)
            name = f"{family}(n={n})"
            try:
                rs = overrides.get(key) or build_root_system(*key)
                P = hilbert_poly(rs).P
                out.append(Check(f"{name}/closed_form", P == closed_form(family, n),
                                 {"algebra": f"{key[0]}{key[1]}"}))
            except Exception as exc:
                out.append(Check(f"{name}/closed_form", False, {"error": str(exc)}))

    for a, b in ((("B", 2), ("C", 2)), (("D", 3), ("A", 3))):
        try:
            pa = hilbert_poly(overrides.get(a) or build_root_system(*a)).P
            pb = hilbert_poly(overrides.get(b) or build_root_system(*b)).P
            out.append(Check(f"isogeny/{a[0]}{a[1]}={b[0]}{b[1]}", pa == pb))
        except Exception as exc:
            out.append(Check(f"isogeny/{a[0]}{a[1]}={b[0]}{b[1]}", False, {"error": str(exc)}))

    bad = [(k, l) for k in range(11) for l in range(7)
           if chern_character_coeff(k, l) != power_sum(k, l)]
    out.append(Check("chern_character/power_sum", not bad,
                     {"counterexample": list(bad[0])} if bad else None))

    hp1 = bernoulli_expand(closed_form("HPn", 1), 1)
    out.append(Check("bernoulli/HP1", hp1 == [0, 4], {"coeffs": [format_rational(c) for c in hp1]}))

    bad = []
    for n in range(1, 7):
        for r in range(0, 7):
            for kappa in (Fraction(1), Fraction(2 * n), Fraction(7, 3), Fraction(1, 5)):
                sp = SpectralParams(n, kappa, r)
                if phi(sp, n + 2 * r, 0) != lambda_min(sp):
                    bad.append((n, r, format_rational(kappa)))
    out.append(Check("spectral/phi_equals_lambda", not bad,
                     {"counterexample": list(bad[0])} if bad else None))
    return out


def twistor_cell_checks(n: int, r: int) -> list[Check]:
    name = f"twistor(n={n},r={r})"
    out = []
    rep = verify_prolongation_lemma(n, r)
    out.append(Check(f"{name}/level_dims", rep.levels_match,
                     {"computed": rep.computed, "formula": rep.formula}))
    out.append(Check(f"{name}/finite_type", rep.termination_degree == 2 * r - 1,
                     {"termination_degree": rep.termination_degree}))
    out.append(Check(f"{name}/spencer_exact", rep.spencer_exact,
                     {"kernel_dims": [s.kernel_dim for s in rep.spencer]}))
    out.append(Check(f"{name}/total_dim", rep.total_matches,
                     {"total": rep.total, "binomial": rep.binomial_total}))

    sym = twistor_symbol(TwistorSymbolSpec(n, r))
    tower = prolongation_tower(sym, 2 * r + 1)
    d = tower.termination_degree
    try:
        lin = build_I_maps(tower, d + 1)
        pi_ok = all(check_partial_inverse(sym, lin.S_maps[l], l) for l in range(1, d + 2))
        ut_ok = all(unitriangular_ok(lin, l) for l in range(d + 2))
        out.append(Check(f"{name}/partial_inverse", pi_ok))
        out.append(Check(f"{name}/I_injective_unitriangular", ut_ok))
    except Exception as exc:
        out.append(Check(f"{name}/I_maps", False, {"error": str(exc)}))
    k = sym.order
    dims = [polynomial_solution_space(sym, D).dim for D in (k + d, k + d + 1)]
    total = tower.total_dim()
    out.append(Check(f"{name}/solution_space", dims == [total, total],
                     {"dims": dims, "A_total": total}))
    return out


def _twistor_cell(nr) -> list[Check]:
    return twistor_cell_checks(*nr)


def prolong_suite(grid=PROLONG_GRID, jobs: int = 1) -> list[Check]:
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_twistor_cell, grid))
    else:
        results = [_twistor_cell(nr) for nr in grid]
    out = [c for cell in results for c in cell]
    tower = prolongation_tower(divergence_symbol(2), cap=5)
    out.append(Check("divergence/not_terminated", not tower.terminated,
                     {"level_dims": tower.level_dims()}))
    return out


def run(scope: str = "all", r_max: int = 20, overrides: dict | None = None,
        jobs: int = 1) -> list[Check]:
    if scope not in ("all", "hilbert", "prolong"):
        raise ValueError(f"unknown scope {scope!r}")
    out: list[Check] = []
    if scope in ("all", "hilbert"):
        out += hilbert_suite(r_max, overrides, jobs)
    if scope in ("all", "prolong"):
        out += prolong_suite(jobs=jobs)
    return sorted(out, key=lambda c: c.name)
