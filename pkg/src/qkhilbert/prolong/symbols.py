"""Constant-coefficient linear differential equations and two concrete
symbols: the quaternionic twistor symbol and a divergence-type control."""
from __future__ import annotations

from dataclasses import dataclass

from .linalg import LinearMap, hstack
from .symmetric import divided_product, sym_space


@dataclass(frozen=True)
class SymbolData:
    """``P(jet^{<=k} psi) = 0`` with ``P = sum_j P_j``.

    ``components[j]`` maps ``Sym^j V (x) E0 -> F``; columns are indexed by
    ``alpha_index * E0_dim + a``.  ``components[k]`` is the principal part.
    """

    order: int
    V_dim: int
    E0_dim: int
    F_dim: int
    components: tuple[LinearMap, ...]
    name: str = "symbol"

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if len(self.components) != self.order + 1:
            raise ValueError("need one component per degree 0..k")
        for j, c in enumerate(self.components):
            expect = (self.F_dim, sym_space(self.V_dim, j).dim * self.E0_dim)
            if c.shape != expect:
                raise ValueError(f"component {j} has shape {c.shape}, expected {expect}")
        if all(c.is_zero() for c in self.components):
            raise ValueError("symbol has no nonzero component")

    @property
    def principal(self) -> LinearMap:
        return self.components[self.order]

    def jet_dim(self, m: int) -> int:
        """``dim Sym^m V (x) E0``."""
        return sym_space(self.V_dim, m).dim * self.E0_dim

    def total_map(self) -> LinearMap:
        """``P`` on ``Sym^{<=k} V (x) E0``."""
        return hstack(list(self.components))


@dataclass(frozen=True)
class TwistorSymbolSpec:
    n: int
    r: int

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("twistor symbol needs n >= 1 and r >= 1")

    @property
    def V_dim(self) -> int:
        return 4 * self.n

    @property
    def E0_dim(self) -> int:
        return 2 * self.r + 1

    @property
    def F_dim(self) -> int:
        return (2 * self.r + 2) * 2 * self.n


def twistor_symbol(spec: TwistorSymbolSpec) -> SymbolData:
    """``(h (x) e) (x) psi -> (h . psi) (x) e`` on ``(H (x) E) (x) Sym^{2r} H``.

    ``V = H (x) E`` has basis ``h_a (x) e_i`` at index ``a * 2n + i``; both
    symmetric powers of ``H`` use divided-power bases.
    """
    n, r = spec.n, spec.r
    two_n = 2 * n
    src = sym_space(2, 2 * r)
    tgt = sym_space(2, 2 * r + 1)
    entries = []
    for a in range(2):
        unit = (1, 0) if a == 0 else (0, 1)
        for i in range(two_n):
            v = a * two_n + i
            for p, mono in enumerate(src.basis):
                c, prod = divided_product(unit, mono)
                row = tgt.index[prod] * two_n + i
                entries.append((row, v * src.dim + p, c))
    sigma = LinearMap.from_entries(spec.F_dim, spec.V_dim * spec.E0_dim, entries)
    zero = LinearMap.zeros(spec.F_dim, spec.E0_dim)
    return SymbolData(1, spec.V_dim, spec.E0_dim, spec.F_dim, (zero, sigma),
                      name=f"twistor(n={n}, r={r})")


def divergence_symbol(dim: int) -> SymbolData:
    """The single equation ``sum_i d psi_i / d x_i = 0`` for ``psi: V -> V``.

    Every prolongation is nonzero, so this equation is not of finite type.
    """
    if dim < 2:
        raise ValueError("divergence control needs dim >= 2")
    entries = [(0, v * dim + v, 1) for v in range(dim)]
    p1 = LinearMap.from_entries(1, dim * dim, entries)
    return SymbolData(1, dim, dim, 1, (LinearMap.zeros(1, dim), p1), name=f"divergence(dim={dim})")
