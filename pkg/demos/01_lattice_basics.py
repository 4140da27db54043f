"""A first walk through the lattice: words, ranks, levels, and cover moves.

Run:  python demos/01_lattice_basics.py
"""

from yflab import (
    EPSILON,
    down_neighbors,
    enumerate_level,
    fibonacci,
    parse,
    split_by_rank,
    up_neighbors,
)

x = parse("21221")
print(f"The word {x.text}: rank {x.rank} (digit sum), length {x.length},")
print(f"  {x.ones} ones and {x.twos} twos; rank = length + twos holds: "
      f"{x.rank} = {x.length} + {x.twos}.")

print("\nGoing up from 2:", sorted(w.text for w in up_neighbors(parse('2'))))
print("Going up from 11:", sorted(w.text for w in up_neighbors(parse('11'))))
print("Going down from 221:", sorted(w.text for w in down_neighbors(parse('221'))))
print("Nothing is below the empty word:", down_neighbors(EPSILON))

print("\nLevel sizes follow the Fibonacci numbers:")
for n in range(9):
    level = enumerate_level(n)
    names = " ".join(v.text or "eps" for v in level)
    print(f"  rank {n}: {len(level):>2} word(s) = fibonacci({n + 1}) = {fibonacci(n + 1):>2}   {names}")

print("\nSplitting 21221 at every rank that admits a suffix of that rank:")
for y in range(x.rank + 1):
    parts = split_by_rank(x, y)
    if parts is None:
        print(f"  rank {y}: no split (a 2 straddles this rank)")
    else:
        head, tail = parts
        print(f"  rank {y}: {head.text or 'eps'} | {tail.text or 'eps'}")
