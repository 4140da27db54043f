"""Counting descending paths two ways, and the Plancherel weights.

The dynamic program walks the graph; the closed formula combines the
f-coefficients of the lower word with the g-values of the upper word.
They agree everywhere, exactly.

Run:  python demos/02_path_counting.py
"""

from math import factorial

from yflab import (
    EPSILON,
    d_from_empty,
    d_paths_dp,
    d_paths_formula,
    enumerate_level,
    f,
    g_all,
    parse,
    plancherel,
)

y = parse("21221")
print(f"g-values of {y.text}: {g_all(y)}")
print(f"Paths from {y.text} down to the empty word:")
print(f"  product of g-values : {d_from_empty(y)}")
print(f"  dynamic program     : {d_paths_dp(EPSILON, y)}")
print(f"  closed formula      : {d_paths_formula(EPSILON, y)}")

x = parse("21")
print(f"\nPaths from {y.text} down to {x.text}:")
print(f"  dynamic program     : {d_paths_dp(x, y)}")
print(f"  closed formula      : {d_paths_formula(x, y)}")
print("  (the formula sums f(x, i, h) times the shifted g-products;")
print(f"   here f({x.text}, i, 2) =",
      [str(f(x, i, 2)) for i in range(x.rank + 1)], ")")

print("\nSquared path counts over one rank sum to the factorial:")
for n in range(9):
    total = sum(d_from_empty(v) ** 2 for v in enumerate_level(n))
    print(f"  rank {n}: sum of d(eps, v)^2 = {total:>5} = {n}! = {factorial(n)}")

print("\nPlancherel weights at rank 4 (they sum to exactly 1):")
for v in enumerate_level(4):
    print(f"  {v.text:>5}: {plancherel(4, v)}")
