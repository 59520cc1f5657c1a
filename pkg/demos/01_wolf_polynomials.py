"""Hilbert polynomials of the Wolf spaces, from root data alone.

Run:  python demos/01_wolf_polynomials.py

Each simple Lie algebra has one quaternionic Kahler symmetric space.  The
highest root five-grades the roots; the half-level roots decide both the
quaternionic dimension n and the product formula for P(r).
"""
from fractions import Fraction

from qkhilbert import build_root_system, hilbert_poly, weyl_dim, wolf_grading
from qkhilbert.rootsys import scale

# Start with G2, the smallest exceptional case.
rs = build_root_system("G", 2)
g = wolf_grading(rs)
print(f"G2 has {len(rs.roots)} roots; level sizes:",
      {str(h): len(v) for h, v in g.levels.items()})
print("quaternionic dimension n =", g.quaternionic_dim)

rep = hilbert_poly(rs, g)
print("P(r) =", rep.P)

# The product formula is checked against Weyl's formula for the
# representation with highest weight r * theta.
for r in range(4):
    print(f"  r={r}: product {rep.P.evaluate(r)}, Weyl {weyl_dim(scale(r, g.wolf_root), g.ordered)}")

# Volume and degree of the twistor space come from the top coefficient.
print("v(M) =", rep.volume, " deg Z =", rep.twistor_degree)

# P(1) is always the dimension of the isometry algebra.
print()
print(f"{'algebra':>8} {'n':>3} {'P(1)':>6} {'v(M)':>18}")
for key in [("C", 3), ("A", 4), ("D", 5), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]:
    rep = hilbert_poly(build_root_system(*key))
    print(f"{rep.name:>8} {rep.n:>3} {str(rep.P.evaluate(1)):>6} {str(rep.volume):>18}")

# Quaternionic projective space attains every bound: its zeroes at
# negative half integers are visible directly.
hp2 = hilbert_poly(build_root_system("C", 3)).P
print()
for x in (Fraction(-1, 2), Fraction(-1)):
    print(f"HP^2 at r = {x}: {hp2.evaluate(x)}")
