"""Concentration of a boundary measure, and the exhaustive identity suite.

As the rank grows, the measure concentrates on words sharing a long suffix
with w (suffix mode) and on words whose pi value is near pi(w) * beta
(pi mode).  The tails outside those sets are computed exactly.

Run:  python demos/05_concentration.py
"""

from fractions import Fraction as Fr

from yflab import TailOnesWord, concentration_sweep, identity_suite, q_sets

w = TailOnesWord.parse("22")
beta = Fr(1, 2)

print("Suffix mode: mass outside {common suffix rank with w >= 2}:")
report = concentration_sweep("suffix", w, beta, 2, [4, 8, 12, 16])
for row in report.rows:
    print(f"  n={row.n:>2}: tail {str(row.tail):>24}  (~{float(row.tail):.5f})")

print("\nPi mode: mass outside {pi(v) within 1/4 of pi(w) * beta}:")
report = concentration_sweep("pi", w, beta, Fr(1, 4), [4, 8, 12, 16])
for row in report.rows:
    print(f"  n={row.n:>2}: tail {str(row.tail):>24}  (~{float(row.tail):.5f})")

inside, outside = q_sets(w, 6, 2)
print(f"\nAt rank 6 the suffix split has {len(inside)} words inside "
      f"and {len(outside)} outside, e.g. outside: "
      f"{sorted(v.text for v in outside)[:4]} ...")

print("\nEvery identity, checked exhaustively up to rank 5 (exact, no tolerances):")
suite = identity_suite(5)
print(suite.to_text())
