"""Root systems of the simple Lie algebras in exact rational coordinates,
the five-step grading by the highest root, and the Weyl dimension formula.

Coordinate models are the classical orthonormal ones:

* ``A_l`` in R^(l+1):  e_i - e_j
* ``B_l`` in R^l:      +-e_i +- e_j, +-e_i
* ``C_l`` in R^l:      +-e_i +- e_j, +-2 e_i
* ``D_l`` in R^l:      +-e_i +- e_j
* ``G_2`` in R^3:      +-(e_i - e_j), +-(2 e_i - e_j - e_k)
* ``F_4`` in R^4:      +-e_i, +-e_i +- e_j, (+-1, +-1, +-1, +-1)/2
* ``E_8`` in R^8:      +-e_i +- e_j, (+-1, ..., +-1)/2 with an even number of minus signs
* ``E_7``, ``E_6``:    the roots of E_8 orthogonal to e7+e8, resp. to e7+e8 and e6+e8
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from .exactcore import as_fraction

log = logging.getLogger(__name__)

Vector = tuple[Fraction, ...]

ADMISSIBLE = "A_l (l>=1), B_l (l>=2), C_l (l>=2), D_l (l>=3), E6, E7, E8, F4, G2"

LEVELS = (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1))


class RootSystemError(ValueError):
    """Inadmissible type/rank or inconsistent root data."""


class WolfGradingError(RuntimeError):
    """A root pairs with the highest root outside the five admissible levels."""


def vec(*xs) -> Vector:
    return tuple(as_fraction(x) for x in xs)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    c = as_fraction(c)
    return tuple(c * a for a in v)


def neg(v: Sequence) -> Vector:
    return tuple(-a for a in v)


def _unit(dim: int, i: int, c=1) -> list[Fraction]:
    out = [Fraction(0)] * dim
    out[i] = Fraction(c)
    return out


def _pm_pairs(dim: int, count: int | None = None) -> list[Vector]:
    """All +-e_i +- e_j, i<j, among the first ``count`` coordinates."""
    count = dim if count is None else count
    out = []
    for i, j in itertools.combinations(range(count), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * dim
            v[i], v[j] = Fraction(si), Fraction(sj)
            out.append(tuple(v))
    return out


def _e8_roots() -> list[Vector]:
    roots = _pm_pairs(8)
    half = Fraction(1, 2)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(s * half for s in signs))
    return roots


def _raw_roots(label: str, rank: int) -> tuple[int, list[Vector]]:
    if label == "A" and rank >= 1:
        dim = rank + 1
        roots = []
        for i, j in itertools.permutations(range(dim), 2):
            v = [Fraction(0)] * dim
            v[i], v[j] = Fraction(1), Fraction(-1)
            roots.append(tuple(v))
        return dim, roots
    if label == "B" and rank >= 2:
        roots = _pm_pairs(rank)
        for i in range(rank):
            roots += [tuple(_unit(rank, i)), tuple(_unit(rank, i, -1))]
        return rank, roots
    if label == "C" and rank >= 2:
        roots = _pm_pairs(rank)
        for i in range(rank):
            roots += [tuple(_unit(rank, i, 2)), tuple(_unit(rank, i, -2))]
        return rank, roots
    if label == "D" and rank >= 3:
        return rank, _pm_pairs(rank)
    if label == "G" and rank == 2:
        roots = []
        for i, j in itertools.permutations(range(3), 2):
            v = [Fraction(0)] * 3
            v[i], v[j] = Fraction(1), Fraction(-1)
            roots.append(tuple(v))
        for i in range(3):
            for s in (1, -1):
                v = [Fraction(-s)] * 3
                v[i] = Fraction(2 * s)
                roots.append(tuple(v))
        return 3, roots
    if label == "F" and rank == 4:
        roots = _pm_pairs(4)
        for i in range(4):
            roots += [tuple(_unit(4, i)), tuple(_unit(4, i, -1))]
        half = Fraction(1, 2)
        for signs in itertools.product((1, -1), repeat=4):
            roots.append(tuple(s * half for s in signs))
        return 4, roots
    if label == "E" and rank in (6, 7, 8):
        roots = _e8_roots()
        cut = {8: [], 7: [vec(0, 0, 0, 0, 0, 0, 1, 1)],
               6: [vec(0, 0, 0, 0, 0, 0, 1, 1), vec(0, 0, 0, 0, 0, 1, 0, 1)]}[rank]
        roots = [mu for mu in roots if all(dot(mu, c) == 0 for c in cut)]
        return 8, roots
    raise RootSystemError(f"inadmissible root system {label}{rank}; admissible: {ADMISSIBLE}")


def generic_functional(dim: int) -> Vector:
    """A deterministic functional with distinct, rapidly decreasing weights.

    Weights ``(3^(dim-1), ..., 3, 1)`` perturbed by ``1/(7 i + 11)`` so that
    no root (coordinates in {0, +-1/2, +-1, +-2}) pairs to zero with it.
    """
    return tuple(Fraction(3 ** (dim - 1 - i)) + Fraction(1, 7 * i + 11) for i in range(dim))


@dataclass(frozen=True)
class RootSystem:
    """Roots of a simple Lie algebra together with a positivity order.

    ``normalization`` multiplies the coordinate dot product; it is 1 for the
    built-in models.  ``functional`` defines the order: a root is positive
    iff it pairs positively with it.
    """

    type_label: str
    rank: int
    ambient_dim: int
    roots: tuple[Vector, ...]
    functional: Vector
    normalization: Fraction = Fraction(1)
    positive_roots: tuple[Vector, ...] = field(init=False)
    simple_roots: tuple[Vector, ...] = field(init=False)

    def __post_init__(self):
        pos = []
        for mu in self.roots:
            p = dot(mu, self.functional)
            if p == 0:
                raise RootSystemError(f"root {_fmt(mu)} is orthogonal to the positivity functional")
            if p > 0:
                pos.append(mu)
        pos.sort(key=lambda m: (-dot(m, self.functional), m))
        posset = set(pos)
        sums = {add(a, b) for a, b in itertools.combinations(pos, 2)}
        simple = tuple(mu for mu in pos if mu not in sums)
        object.__setattr__(self, "positive_roots", tuple(pos))
        object.__setattr__(self, "simple_roots", simple)
        if 2 * len(posset) != len(self.roots):
            raise RootSystemError("positive roots are not half of all roots")

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def lie_algebra_dim(self) -> int:
        return len(self.roots) + self.rank

    def inner(self, u, v) -> Fraction:
        return self.normalization * dot(u, v)

    def reordered(self, functional: Sequence) -> "RootSystem":
        return RootSystem(self.type_label, self.rank, self.ambient_dim, self.roots,
                          tuple(functional), self.normalization)

    @classmethod
    def from_roots(cls, type_label: str, rank: int, roots: Sequence[Sequence],
                   normalization=1) -> "RootSystem":
        """Wrap externally supplied root data (no closure check is made)."""
        rts = [vec(*mu) for mu in roots]
        if not rts:
            raise RootSystemError("empty root table")
        dim = len(rts[0])
        if any(len(mu) != dim for mu in rts):
            raise RootSystemError("root vectors have inconsistent lengths")
        rset = set(rts)
        if len(rset) != len(rts):
            raise RootSystemError("duplicate roots in table")
        missing = [mu for mu in rts if neg(mu) not in rset]
        if missing:
            raise RootSystemError(f"root table not closed under negation: {_fmt(missing[0])}")
        return cls(type_label, rank, dim, tuple(sorted(rts)), generic_functional(dim),
                   as_fraction(normalization))


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Root system of type ``type_label`` and ``rank`` in its standard model."""
    label = type_label.upper()
    dim, roots = _raw_roots(label, rank)
    return RootSystem(label, rank, dim, tuple(sorted(roots)), generic_functional(dim))


def parse_algebra(name: str) -> tuple[str, int]:
    """``"E8"`` -> ``("E", 8)``; also accepts ``"E_8"``."""
    s = name.strip().upper().replace("_", "")
    if len(s) < 2 or not s[0].isalpha() or not s[1:].isdigit():
        raise RootSystemError(f"cannot parse algebra name {name!r}; admissible: {ADMISSIBLE}")
    return s[0], int(s[1:])


def admissible_algebras(max_rank: int = 8) -> list[tuple[str, int]]:
    out = []
    for rank in range(1, max_rank + 1):
        out.append(("A", rank))
    out += [("B", l) for l in range(2, max_rank + 1)]
    out += [("C", l) for l in range(2, max_rank + 1)]
    out += [("D", l) for l in range(3, max_rank + 1)]
    out += [(t, l) for t, l in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)) if l <= max_rank]
    return out


@lru_cache(maxsize=256)
def half_sum_positive(rs: RootSystem) -> Vector:
    total = [Fraction(0)] * rs.ambient_dim
    for mu in rs.positive_roots:
        for i, c in enumerate(mu):
            total[i] += c
    return tuple(c / 2 for c in total)


@lru_cache(maxsize=256)
def highest_root(rs: RootSystem) -> Vector:
    return max(rs.roots, key=lambda mu: dot(mu, rs.functional))


@dataclass(frozen=True)
class WolfGrading:
    """Grading of the roots by their pairing with the highest root.

    ``levels[h]`` holds the roots ``mu`` with
    ``<wolf_root, mu> = h <wolf_root, wolf_root>``.  ``ordered`` is the root
    system re-ordered so that the levels 1 and 1/2 are positive.
    """

    wolf_root: Vector
    levels: dict
    quaternionic_dim: int
    rho: Vector
    rho_k0: Vector
    ordered: RootSystem
    degenerate: bool = False

    @property
    def half_level(self) -> tuple[Vector, ...]:
        return self.levels[Fraction(1, 2)]


def _orthogonal_generic(rs: RootSystem, theta: Vector, zero_level) -> Vector:
    """A deterministic vector orthogonal to ``theta`` that pairs nonzero with
    every root of level 0."""
    tt = dot(theta, theta)
    for shift in itertools.count():
        g = tuple(Fraction(5 ** (rs.ambient_dim - 1 - i)) + Fraction(1, 13 * i + 17 + shift)
                  for i in range(rs.ambient_dim))
        v0 = sub(g, scale(dot(g, theta) / tt, theta))
        if all(dot(v0, mu) != 0 for mu in zero_level):
            return v0
        if shift > 1000:
            raise WolfGradingError("could not find a regular vector orthogonal to the highest root")


def wolf_grading(rs: RootSystem) -> WolfGrading:
    theta = highest_root(rs)
    tt = dot(theta, theta)
    levels = {h: [] for h in LEVELS}
    for mu in rs.roots:
        h = dot(theta, mu) / tt
        if h not in levels:
            raise WolfGradingError(
                f"{rs.name}: root {_fmt(mu)} has level {h} outside {{-1,-1/2,0,1/2,1}}")
        levels[h].append(mu)
    if len(levels[Fraction(1)]) != 1 or len(levels[Fraction(-1)]) != 1:
        raise WolfGradingError(f"{rs.name}: highest root level is not a single root")
    if len(levels[Fraction(1, 2)]) != len(levels[Fraction(-1, 2)]) or len(levels[Fraction(1, 2)]) % 2:
        raise WolfGradingError(f"{rs.name}: half levels are unbalanced")

    v0 = _orthogonal_generic(rs, theta, levels[Fraction(0)])
    bound = max(abs(dot(v0, mu)) for mu in rs.roots)
    eps = tt / (2 * (1 + bound))
    v = add(theta, scale(eps, v0))
    ordered = rs.reordered(v)
    for mu in levels[Fraction(1)] + levels[Fraction(1, 2)]:
        if dot(mu, v) <= 0:
            raise WolfGradingError(f"{rs.name}: level>0 root {_fmt(mu)} is not positive")

    n = len(levels[Fraction(1, 2)]) // 2
    rho = half_sum_positive(ordered)
    pos0 = [mu for mu in levels[Fraction(0)] if dot(mu, v) > 0]
    rho_k0 = tuple(sum((mu[i] for mu in pos0), Fraction(0)) / 2 for i in range(rs.ambient_dim))
    degenerate = n == 0
    if degenerate:
        log.warning("%s: quaternionic dimension n = 0 (degenerate Wolf space)", rs.name)
    frozen = {h: tuple(sorted(levels[h])) for h in LEVELS}
    return WolfGrading(theta, frozen, n, rho, rho_k0, ordered, degenerate)


def casimir(lam: Sequence, rs: RootSystem, normalization: str = "killing") -> Fraction:
    """``<lam, lam + 2 rho>`` in the requested scaling of the inner product.

    ``killing``: the adjoint Casimir is 1; ``wolf_unit``: the highest root has
    length 1; ``raw``: the stored inner product of ``rs``.
    """
    rho = half_sum_positive(rs)
    lam = vec(*lam)
    raw = rs.inner(lam, add(lam, scale(2, rho)))
    if normalization == "raw":
        return raw
    theta = highest_root(rs)
    if normalization == "killing":
        return raw / rs.inner(theta, add(theta, scale(2, rho)))
    if normalization == "wolf_unit":
        return raw / rs.inner(theta, theta)
    raise ValueError(f"unknown normalization {normalization!r}")


def weyl_dim(lam: Sequence, rs: RootSystem) -> int:
    """Dimension of the irreducible representation with highest weight ``lam``."""
    lam = vec(*lam)
    for a in rs.simple_roots:
        if dot(lam, a) < 0:
            raise ValueError(f"weight {_fmt(lam)} is not dominant (pairs negatively with {_fmt(a)})")
    rho = half_sum_positive(rs)
    shifted = add(lam, rho)
    num, den = Fraction(1), Fraction(1)
    for a in rs.positive_roots:
        num *= dot(shifted, a)
        den *= dot(rho, a)
    d = num / den
    if d.denominator != 1:
        raise ValueError(f"non-integral dimension {d} for weight {_fmt(lam)}")
    return d.numerator


def _fmt(v) -> str:
    if v and isinstance(v[0], tuple):
        v = v[0]
    return "(" + ", ".join(str(c) for c in v) + ")"
