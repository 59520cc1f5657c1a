"""Bernoulli expansion and the upper bound by quaternionic projective space.

Run:  python demos/02_bernoulli_and_bounds.py
"""
import math

from qkhilbert import build_root_system, hilbert_poly
from qkhilbert.exactcore import binomial_basis_coeffs
from qkhilbert.hilbert import bernoulli_expand, chern_character_coeff, power_sum

# The polynomial is antisymmetric about r = -(n+1)/2, so it is a combination
# of shifted odd Bernoulli polynomials.  The top coefficient is v(M).
rep = hilbert_poly(build_root_system("F", 4))
cs = bernoulli_expand(rep.P, rep.n)
print("F4: Bernoulli coordinates", [str(c) for c in cs])
print("    top coordinate equals v(M):", cs[-1] == rep.volume)

# Each coordinate pairs Sym^k H against (4u)^l; the same number is a plain
# power sum over the weights of Sym^k H.
print("ch_l(Sym^k H), k = 4:", [str(chern_character_coeff(4, l)) for l in range(4)])
print("power sums,     k = 4:", [str(power_sum(4, l)) for l in range(4)])

# Integer valued polynomials have integer coordinates in the basis C(r, i).
print("F4 in the binomial basis:", [str(c) for c in binomial_basis_coeffs(rep.P)][:6], "...")

# P(r) is squeezed between 0 and the HP^n polynomial.
print()
for key in [("G", 2), ("A", 3), ("E", 6)]:
    rep = hilbert_poly(build_root_system(*key))
    n = rep.n
    ratio = [float(rep.P.evaluate(r) / math.comb(2 * n + 1 + 2 * r, 2 * n + 1)) for r in (0, 1, 5, 20)]
    print(f"{rep.name}: P(r) / P_HP(r) at r = 0, 1, 5, 20:", [f"{x:.4f}" for x in ratio])
