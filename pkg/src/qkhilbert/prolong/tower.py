"""Prolongations of a constant-coefficient symbol and the maps that
linearize jets of solutions.

Notation: ``J_m = Sym^m V (x) E0`` and ``J_{<=N} = J_0 + ... + J_N`` with
the graded pieces stacked in increasing degree.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .linalg import LinearMap, SubspaceBasis, hstack, kron, vstack
from .symbols import SymbolData, TwistorSymbolSpec, twistor_symbol
from .symmetric import comultiplication, multi_indices, sym_space


def prolongation_map(sym: SymbolData, l: int) -> LinearMap:
    """``(id (x) res P) o Delta : J_{k+l} -> Sym^l V (x) F``."""
    return graded_block(sym, l, sym.order + l)


def graded_block(sym: SymbolData, l: int, m: int) -> LinearMap:
    """Component of ``P^l`` on ``J_m``: ``(id (x) P_{m-l}) o Delta_{l, m-l}``."""
    j = m - l
    rows = sym_space(sym.V_dim, l).dim * sym.F_dim
    if j < 0 or j > sym.order:
        return LinearMap.zeros(rows, sym.jet_dim(m))
    comp = sym.components[j]
    if comp.is_zero():
        return LinearMap.zeros(rows, sym.jet_dim(m))
    delta = kron(comultiplication(sym.V_dim, l, j), LinearMap.identity(sym.E0_dim))
    return kron(LinearMap.identity(sym_space(sym.V_dim, l).dim), comp) @ delta


def prolong_level(sym: SymbolData, l: int) -> SubspaceBasis:
    """Basis of the ``l``-th prolongation inside ``J_{k+l}``."""
    if l < 0:
        raise ValueError("l must be non-negative")
    return prolongation_map(sym, l).kernel()


def build_P_l(sym: SymbolData, l: int) -> LinearMap:
    """``P^l : J_{<=k+l} -> Sym^l V (x) F`` with ``P^l(jet psi) = jet^l(P(jet psi))``."""
    return hstack([graded_block(sym, l, m) for m in range(sym.order + l + 1)])


@dataclass
class ProlongationTower:
    symbol: SymbolData
    levels: list[SubspaceBasis]
    A_total: SubspaceBasis
    termination_degree: int | None
    cap: int

    @property
    def terminated(self) -> bool:
        return self.termination_degree is not None

    def level_dims(self) -> list[int]:
        return [b.dim for b in self.levels]

    def total_dim(self, upto: int | None = None) -> int:
        """``dim A + dim A^(1) + ... + dim A^(upto)`` (default: the termination degree)."""
        if upto is None:
            if self.termination_degree is None:
                raise ValueError("tower did not terminate")
            upto = self.termination_degree
        return self.A_total.dim + sum(b.dim for b in self.levels[1:upto + 1])


def prolongation_tower(sym: SymbolData, cap: int) -> ProlongationTower:
    """Levels ``0..cap`` until the first zero level.

    ``termination_degree`` is the least ``d >= 0`` with ``A^(d+1) = 0``, or
    ``None`` when every computed level is nonzero.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    levels: list[SubspaceBasis] = []
    d = None
    for l in range(cap + 1):
        lev = prolong_level(sym, l)
        levels.append(lev)
        if lev.dim == 0:
            d = max(l - 1, 0)
            break
    return ProlongationTower(sym, levels, sym.total_map().kernel(), d, cap)


# -- Spencer complex -----------------------------------------------------------

def _wedge(d: int) -> LinearMap:
    """``V (x) V -> Lambda^2 V``, ``a (x) b -> a ^ b``; pairs ``i<j`` in lex order."""
    pairs = list(itertools.combinations(range(d), 2))
    entries = []
    for k, (i, j) in enumerate(pairs):
        entries.append((k, i * d + j, 1))
        entries.append((k, j * d + i, -1))
    return LinearMap.from_entries(len(pairs), d * d, entries)


def spencer_map(sym: SymbolData, l: int) -> LinearMap:
    """``id ^ Delta`` on ``V (x) J_{k+l} -> Lambda^2 V (x) J_{k+l-1}``."""
    d, m = sym.V_dim, sym.order + l
    if m < 1:
        raise ValueError("need k + l >= 1")
    inner = kron(LinearMap.identity(d),
                 kron(comultiplication(d, 1, m - 1), LinearMap.identity(sym.E0_dim)))
    rest = sym.jet_dim(m - 1)
    return kron(_wedge(d), LinearMap.identity(rest)) @ inner


@dataclass
class SpencerResult:
    l: int
    kernel_dim: int
    next_level_dim: int

    @property
    def exact(self) -> bool:
        return self.kernel_dim == self.next_level_dim


def spencer_exactness(tower: ProlongationTower, l: int) -> SpencerResult:
    """Compare ``dim ker(id ^ Delta)`` on ``V (x) A^(l)`` with ``dim A^(l+1)``."""
    sym = tower.symbol
    if not 0 <= l < len(tower.levels):
        raise ValueError(f"level {l} not computed")
    basis = tower.levels[l].matrix
    restricted = spencer_map(sym, l) @ kron(LinearMap.identity(sym.V_dim), basis)
    kdim = restricted.nullity()
    if l + 1 < len(tower.levels):
        nxt = tower.levels[l + 1].dim
    else:
        nxt = prolong_level(sym, l + 1).dim
    return SpencerResult(l, kdim, nxt)


# -- partial inverses and the maps I^{<=l} ---------------------------------------

@dataclass
class JetLinearization:
    """``I^{<=l}`` for ``l = 0..L`` with the partial inverses ``S^l`` used."""

    tower: ProlongationTower
    I_maps: list[LinearMap]
    S_maps: list[LinearMap | None]
    P_maps: list[LinearMap]
    summand_dims: list[int] = field(default_factory=list)

    def offsets(self, l: int) -> list[int]:
        """Column offsets of the summands ``A, A^(1), ..., A^(l)`` in ``I^{<=l}``."""
        out, acc = [], 0
        for s in self.summand_dims[: l + 1]:
            out.append(acc)
            acc += s
        return out


class InjectivityError(RuntimeError):
    pass


def _level_basis(tower: ProlongationTower, l: int) -> SubspaceBasis:
    if l < len(tower.levels):
        return tower.levels[l]
    if tower.terminated:
        return SubspaceBasis(LinearMap.zeros(tower.symbol.jet_dim(tower.symbol.order + l), 0))
    return prolong_level(tower.symbol, l)


def build_I_maps(tower: ProlongationTower, L: int) -> JetLinearization:
    sym = tower.symbol
    k = sym.order
    I = tower.A_total.matrix
    I_maps = [I]
    S_maps: list[LinearMap | None] = [None]
    P_maps = [build_P_l(sym, 0)]
    dims = [tower.A_total.dim]
    if I.rank() != I.cols:
        raise InjectivityError("I^{<=0} is not injective")
    for l in range(1, L + 1):
        top = prolongation_map(sym, l)
        S = top.partial_inverse()
        Pl = build_P_l(sym, l)
        low = Pl.block(range(Pl.rows), range(0, Pl.cols - top.cols))
        B = _level_basis(tower, l).matrix
        correction = -(S @ (low @ I))
        upper = hstack([I, LinearMap.zeros(I.rows, B.cols)])
        lower = hstack([correction, B])
        I = vstack([upper, lower])
        if I.rank() != I.cols:
            raise InjectivityError(f"I^{{<={l}}} is not injective")
        I_maps.append(I)
        S_maps.append(S)
        P_maps.append(Pl)
        dims.append(B.cols)
    return JetLinearization(tower, I_maps, S_maps, P_maps, dims)


def check_partial_inverse(sym: SymbolData, S: LinearMap, l: int) -> bool:
    top = prolongation_map(sym, l)
    return top @ S @ top == top


def unitriangular_ok(lin: JetLinearization, l: int) -> bool:
    """Summand ``A^(r)`` has zero rows below degree ``k+r`` and the inclusion
    on ``J_{k+r}``."""
    sym = lin.tower.symbol
    k = sym.order
    I = lin.I_maps[l]
    offs = lin.offsets(l)
    row_off = [0]
    for m in range(k + l + 1):
        row_off.append(row_off[-1] + sym.jet_dim(m))
    for r in range(1, l + 1):
        cols = range(offs[r], offs[r] + lin.summand_dims[r])
        below = I.block(range(0, row_off[k + r]), cols)
        diag = I.block(range(row_off[k + r], row_off[k + r + 1]), cols)
        if not below.is_zero():
            return False
        if diag != _level_basis(lin.tower, r).matrix:
            return False
    return True


# -- polynomial solutions (flat model oracle) ---------------------------------------

@dataclass
class PolynomialSolutions:
    """Polynomial solutions ``psi_a = sum_alpha u_{alpha,a} x^alpha``.

    Coordinates are ordered by degree, then multi-index, then ``a``.
    """

    symbol: SymbolData
    degree_bound: int
    monomials: list[tuple[int, ...]]
    basis: SubspaceBasis

    @property
    def dim(self) -> int:
        return self.basis.dim

    def jet_at(self, u: dict, point, order: int) -> dict:
        """``jet^{<=order}`` of ``psi`` at ``point`` in divided-power coordinates."""
        sym = self.symbol
        e0 = sym.E0_dim
        out = {}
        off = 0
        for m in range(order + 1):
            for gi, gamma in enumerate(multi_indices(sym.V_dim, m)):
                for a in range(e0):
                    val = 0
                    for mi, alpha in enumerate(self.monomials):
                        c = u.get(mi * e0 + a)
                        if not c:
                            continue
                        rest = tuple(x - y for x, y in zip(alpha, gamma))
                        if min(rest, default=0) < 0:
                            continue
                        term = c
                        for x, g in zip(alpha, gamma):
                            term *= math.perm(x, g)
                        for p, e in zip(point, rest):
                            if e:
                                term *= p ** e
                        val += term
                    if val:
                        out[off + gi * e0 + a] = val
            off += sym.jet_dim(m)
        return out


def polynomial_solution_space(sym: SymbolData, degree_bound: int) -> PolynomialSolutions:
    """All polynomial ``psi`` of degree ``<= degree_bound`` with ``P(jet psi) = 0``.

    The equations are the coefficients of the polynomial ``P(jet psi)(x)``,
    obtained by differentiating monomials directly.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    d, e0 = sym.V_dim, sym.E0_dim
    monos = [a for m in range(degree_bound + 1) for a in multi_indices(d, m)]
    mindex = {a: i for i, a in enumerate(monos)}
    comp_entries = []
    for j, comp in enumerate(sym.components):
        gammas = multi_indices(d, j)
        for f, col, val in comp.entries():
            gi, a = divmod(col, e0)
            comp_entries.append((f, gammas[gi], a, val))
    entries = []
    # row (delta, f): coefficient of x^delta in output component f
    for di, delta in enumerate(monos):
        for f, gamma, a, val in comp_entries:
            alpha = tuple(x + y for x, y in zip(delta, gamma))
            ai = mindex.get(alpha)
            if ai is None:
                continue
            c = val
            for x, g in zip(alpha, gamma):
                c *= math.perm(x, g)
            entries.append((di * sym.F_dim + f, ai * e0 + a, c))
    eqs = LinearMap.from_entries(len(monos) * sym.F_dim, len(monos) * e0, entries)
    return PolynomialSolutions(sym, degree_bound, monos, eqs.kernel())


# -- the twistor lemma -----------------------------------------------------------

def lemma_level_dim(n: int, r: int, l: int) -> int:
    """``dim Sym^{2r-l-1} H (x) Sym^{l+1} E``."""
    if l > 2 * r - 1:
        return 0
    return (2 * r - l) * math.comb(2 * n + l, l + 1)


@dataclass
class ProlongationLemmaReport:
    n: int
    r: int
    computed: list[int]
    formula: list[int]
    total: int
    binomial_total: int
    termination_degree: int | None
    spencer: list[SpencerResult]

    @property
    def levels_match(self) -> bool:
        return self.computed == self.formula

    @property
    def total_matches(self) -> bool:
        return self.total == self.binomial_total

    @property
    def spencer_exact(self) -> bool:
        return all(s.exact for s in self.spencer)

    @property
    def passed(self) -> bool:
        return (self.levels_match and self.total_matches and self.spencer_exact
                and self.termination_degree == 2 * self.r - 1)


def verify_prolongation_lemma(n: int, r: int, spencer: bool = True) -> ProlongationLemmaReport:
    tower = prolongation_tower(twistor_symbol(TwistorSymbolSpec(n, r)), cap=2 * r + 1)
    computed = tower.level_dims()
    formula = [lemma_level_dim(n, r, l) for l in range(len(computed))]
    total = tower.total_dim() if tower.terminated else -1
    sp = [spencer_exactness(tower, l) for l in range(len(computed) - 1)] if spencer else []
    return ProlongationLemmaReport(n, r, computed, formula, total,
                                   math.comb(2 * n + 1 + 2 * r, 2 * n + 1),
                                   tower.termination_degree, sp)
