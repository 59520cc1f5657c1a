"""Prolongations of the twistor symbol in the flat model.

Run:  python demos/03_twistor_prolongation.py

The symbol sends (h (x) e) (x) psi to (h . psi) (x) e.  Its prolongations
shrink level by level and vanish at level 2r, so the equation is of finite
type and its solutions are bounded by dim Sym^{2r}(H + E).
"""
import math

from qkhilbert.prolong.symbols import TwistorSymbolSpec, divergence_symbol, twistor_symbol
from qkhilbert.prolong.tower import (
    lemma_level_dim,
    polynomial_solution_space,
    prolongation_tower,
    spencer_exactness,
)

for n, r in [(1, 1), (1, 2), (2, 2)]:
    sym = twistor_symbol(TwistorSymbolSpec(n, r))
    tower = prolongation_tower(sym, cap=2 * r + 1)
    print(f"n={n} r={r}: levels {tower.level_dims()}")
    print("          formula", [lemma_level_dim(n, r, l) for l in range(2 * r + 1)])
    ok = all(spencer_exactness(tower, l).exact for l in range(2 * r))
    print("          Spencer sequence exact:", ok)
    total = tower.total_dim()
    print(f"          total {total} = C({2 * n + 1 + 2 * r}, {2 * n + 1}) =",
          math.comb(2 * n + 1 + 2 * r, 2 * n + 1))

# Polynomial solutions of the flat equation fill the bound exactly.
sym = twistor_symbol(TwistorSymbolSpec(1, 1))
print()
print("polynomial solutions, n=1 r=1, by degree bound:",
      [polynomial_solution_space(sym, D).dim for D in range(4)])

# A divergence equation has prolongations at every level.
tower = prolongation_tower(divergence_symbol(2), cap=5)
print("divergence control:", tower.level_dims(), "terminated:", tower.terminated)
