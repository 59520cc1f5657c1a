import math
from fractions import Fraction

import pytest

from qkhilbert.prolong.linalg import LinearMap, SubspaceBasis
from qkhilbert.prolong.symbols import (
    SymbolData,
    TwistorSymbolSpec,
    divergence_symbol,
    twistor_symbol,
)
from qkhilbert.prolong.tower import (
    build_I_maps,
    check_partial_inverse,
    lemma_level_dim,
    polynomial_solution_space,
    prolong_level,
    prolongation_tower,
    spencer_exactness,
    unitriangular_ok,
    verify_prolongation_lemma,
)

GRID = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]
FROZEN_LEVELS = {
    (1, 1): [4, 3, 0],
    (1, 2): [8, 9, 8, 5, 0],
    (1, 3): [12, 15, 16, 15, 12, 7, 0],
    (2, 1): [8, 10, 0],
    (2, 2): [16, 30, 40, 35, 0],
}


def sym(n, r):
    return twistor_symbol(TwistorSymbolSpec(n, r))


def test_twistor_dimensions():
    s = TwistorSymbolSpec(2, 3)
    assert (s.V_dim, s.E0_dim, s.F_dim) == (8, 7, 32)
    with pytest.raises(ValueError):
        TwistorSymbolSpec(0, 1)


def test_symbol_validation():
    with pytest.raises(ValueError):
        SymbolData(1, 2, 1, 1, (LinearMap.zeros(1, 1),))
    with pytest.raises(ValueError):
        SymbolData(1, 2, 1, 1, (LinearMap.zeros(1, 1), LinearMap.zeros(1, 2)))
    with pytest.raises(ValueError):
        SymbolData(1, 2, 1, 1, (LinearMap.zeros(1, 1), LinearMap.zeros(1, 3)))


@pytest.mark.parametrize("nr", GRID)
def test_sigma_is_surjective(nr):
    # h . psi spans Sym^{2r+1} H, so sigma maps onto F
    s = sym(*nr)
    assert s.principal.rank() == s.F_dim


@pytest.mark.parametrize("nr", GRID)
def test_level_dims(nr):
    n, r = nr
    tower = prolongation_tower(sym(n, r), cap=2 * r + 1)
    assert tower.level_dims() == FROZEN_LEVELS[nr]
    assert tower.level_dims() == [lemma_level_dim(n, r, l) for l in range(2 * r + 1)]
    assert tower.termination_degree == 2 * r - 1
    assert tower.total_dim() == math.comb(2 * n + 1 + 2 * r, 2 * n + 1)


def test_level_formula_report():
    rep = verify_prolongation_lemma(1, 2)
    assert rep.passed
    assert [s.exact for s in rep.spencer] == [True] * 4


def test_level_zero_is_symbol_kernel():
    s = sym(2, 1)
    assert prolong_level(s, 0).dim == s.jet_dim(1) - s.principal.rank()
    with pytest.raises(ValueError):
        prolong_level(s, -1)


def test_cap_below_termination():
    tower = prolongation_tower(sym(1, 1), cap=1)
    assert not tower.terminated
    assert tower.termination_degree is None
    assert tower.level_dims() == [4, 3]


def test_divergence_not_finite_type():
    tower = prolongation_tower(divergence_symbol(2), cap=5)
    assert not tower.terminated
    dims = tower.level_dims()
    assert all(d > 0 for d in dims)
    # dim Sym^{l+1}V (x) V - dim Sym^l V for V = R^2
    assert dims == [2 * (l + 2) - (l + 1) for l in range(6)]
    with pytest.raises(ValueError):
        divergence_symbol(1)


@pytest.mark.parametrize("nr", [(1, 1), (1, 2), (2, 1)])
def test_spencer_exact(nr):
    tower = prolongation_tower(sym(*nr), cap=2 * nr[1] + 1)
    for l in range(len(tower.levels) - 1):
        res = spencer_exactness(tower, l)
        assert res.exact, res


@pytest.mark.parametrize("nr", [(1, 1), (1, 2), (2, 1)])
def test_I_maps(nr):
    s = sym(*nr)
    tower = prolongation_tower(s, cap=2 * nr[1] + 1)
    d = tower.termination_degree
    lin = build_I_maps(tower, d + 1)
    for l in range(1, d + 2):
        assert check_partial_inverse(s, lin.S_maps[l], l)
    for l in range(d + 2):
        assert unitriangular_ok(lin, l)
        assert lin.I_maps[l].rank() == lin.I_maps[l].cols


@pytest.mark.parametrize("nr", [(1, 1), (1, 2), (2, 1)])
def test_solution_oracle_stationary(nr):
    s = sym(*nr)
    tower = prolongation_tower(s, cap=2 * nr[1] + 1)
    d, k = tower.termination_degree, s.order
    total = tower.total_dim()
    dims = [polynomial_solution_space(s, D).dim for D in range(k + d + 2)]
    assert dims[k + d] == dims[k + d + 1] == total
    assert dims == sorted(dims)
    assert max(dims) <= total


@pytest.mark.parametrize("nr", [(1, 1), (1, 2)])
def test_solution_jets_lie_in_image(nr):
    # the jet of a solution at any point is determined by its image under I^{<=l}
    s = sym(*nr)
    tower = prolongation_tower(s, cap=2 * nr[1] + 1)
    d, k = tower.termination_degree, s.order
    lin = build_I_maps(tower, d)
    sols = polynomial_solution_space(s, k + d)
    pt0 = (0,) * s.V_dim
    pt1 = tuple(Fraction(i + 1, 3) for i in range(s.V_dim))
    for l in range(d + 1):
        image = SubspaceBasis(lin.I_maps[l])
        for u in sols.basis.vectors():
            for pt in (pt0, pt1):
                assert image.contains(sols.jet_at(u, pt, k + l))


def test_negative_degree_bound():
    with pytest.raises(ValueError):
        polynomial_solution_space(sym(1, 1), -1)
