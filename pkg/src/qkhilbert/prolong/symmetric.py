"""Symmetric powers in divided-power bases.

``Sym^m V`` with ``dim V = d`` has basis ``e^(alpha) = x^alpha / alpha!`` for
multi-indices ``|alpha| = m``, ordered lexicographically with the largest
first exponent first.  In this basis the comultiplication has 0/1 entries:

    Delta(e^(alpha)) = sum_{beta + gamma = alpha} e^(beta) (x) e^(gamma)

and coordinates of a jet are plain partial derivatives.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .linalg import LinearMap

MultiIndex = tuple[int, ...]


@lru_cache(maxsize=None)
def multi_indices(d: int, m: int) -> tuple[MultiIndex, ...]:
    if d == 0:
        return ((),) if m == 0 else ()
    if d == 1:
        return ((m,),)
    out = []
    for first in range(m, -1, -1):
        for rest in multi_indices(d - 1, m - first):
            out.append((first,) + rest)
    return tuple(out)


@dataclass(frozen=True)
class SymTensorSpace:
    base_dim: int
    degree: int
    basis: tuple[MultiIndex, ...] = field(init=False, repr=False)
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        b = multi_indices(self.base_dim, self.degree)
        object.__setattr__(self, "basis", b)
        object.__setattr__(self, "index", {a: i for i, a in enumerate(b)})

    @property
    def dim(self) -> int:
        return len(self.basis)


@lru_cache(maxsize=None)
def sym_space(d: int, m: int) -> SymTensorSpace:
    return SymTensorSpace(d, m)


def sym_dim(d: int, m: int) -> int:
    return math.comb(d + m - 1, m) if m >= 0 else 0


def _sub(a: MultiIndex, b: MultiIndex) -> MultiIndex | None:
    out = tuple(x - y for x, y in zip(a, b))
    return out if min(out, default=0) >= 0 else None


@lru_cache(maxsize=None)
def comultiplication(d: int, k: int, l: int) -> LinearMap:
    """``Sym^{k+l} V -> Sym^k V (x) Sym^l V``."""
    src, left, right = sym_space(d, k + l), sym_space(d, k), sym_space(d, l)
    entries = []
    for col, alpha in enumerate(src.basis):
        for bi, beta in enumerate(left.basis):
            gamma = _sub(alpha, beta)
            if gamma is not None:
                entries.append((bi * right.dim + right.index[gamma], col, 1))
    return LinearMap.from_entries(left.dim * right.dim, src.dim, entries)


@lru_cache(maxsize=None)
def iota(d: int, k: int) -> LinearMap:
    """Embedding ``Sym^k V -> V^(x)k``, ``xi^k/k! -> xi (x) ... (x) xi``."""
    src = sym_space(d, k)
    entries = []
    for seq in itertools.product(range(d), repeat=k):
        alpha = [0] * d
        for s in seq:
            alpha[s] += 1
        row = 0
        for s in seq:
            row = row * d + s
        entries.append((row, src.index[tuple(alpha)], 1))
    return LinearMap.from_entries(d ** k, src.dim, entries)


def divided_product(a: MultiIndex, b: MultiIndex) -> tuple[int, MultiIndex]:
    """``e^(a) e^(b) = c e^(a+b)``; returns ``(c, a+b)``."""
    s = tuple(x + y for x, y in zip(a, b))
    c = 1
    for x, y in zip(a, b):
        c *= math.comb(x + y, x)
    return c, s
