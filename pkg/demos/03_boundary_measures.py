"""Boundary measures: exact masses from an infinite word and a parameter beta.

A boundary point is modeled as 1^inf followed by a finite core.  The mass
of a word v is d(eps, v) * d'_beta(v, w); masses over one rank sum to
exactly 1.  At beta = 1 the pre-limit path ratios stabilize after finitely
many steps, and the measure degenerates to a point mass.

Run:  python demos/03_boundary_measures.py
"""

from fractions import Fraction as Fr

from yflab import (
    TailOnesWord,
    d1_prime,
    level_distribution,
    mu,
    mu_prelimit,
    parse,
    suffix_of_infinite,
)

w = TailOnesWord.parse("22")
print(f"w = 1^inf followed by {w.core.text}; its finite suffixes:")
for m in range(7):
    print(f"  last {m} digits: {suffix_of_infinite(w, m).text or 'eps'}")

print("\nMasses at rank 6 for beta = 1/2 (exact, summing to 1):")
dist = level_distribution(w, Fr(1, 2), 6)
for v, mass in dist.masses.items():
    print(f"  {v.text:>6}: {str(mass):>12}  (~{float(mass):.4f})")
print(f"  total: {sum(dist.masses.values())}")

print("\nAt beta = 1 the same level is a point mass:")
dist1 = level_distribution(w, Fr(1), 6)
for v, mass in dist1.masses.items():
    if mass:
        print(f"  all mass sits on {v.text}: {mass}")

x = parse("212")
print(f"\nStabilization of the pre-limit ratio for x = {x.text}:")
print(f"  limit value d'_1(x, w) scaled by d(eps, x): {mu(w, Fr(1), x)}")
for m in range(3, 8):
    wm = suffix_of_infinite(w, m)
    print(f"  m = {m} (w_m = {wm.text}): pre-limit mass {mu_prelimit(wm, x)}")
print("  exact agreement from m = max(core length, word length) onward.")

print("\nThe kernel d'_1(v, w) vanishes exactly on words the core cannot reach:")
for v in (parse("22"), parse("1122"), parse("212"), parse("2211")):
    print(f"  d'_1({v.text}, w) = {d1_prime(v, w)}")
