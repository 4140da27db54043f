"""Counting saturated descending paths between lattice words.

Two independent routes are provided: a dynamic-programming oracle walking
the graph level by level, and the closed formula

    d(x, y) = sum over i = 0..rank(x) of
              f(x, i, h(x, y)) * product over j of (g(y, j) - i)

with h(x, y) the length of the longest common suffix.  The two must agree
everywhere; tests enforce this.  All counts are exact arbitrary-precision
integers (n! overflows 64 bits at n = 21).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .harmonic import f, g_all
from .words import YFWord, common_suffix_len, down_neighbors


def d_paths_dp(x: YFWord, y: YFWord) -> int:
    """Number of saturated descending paths from y to x, by frontier DP."""
    if sum(y) < sum(x):
        return 0
    frontier = {YFWord(y): 1}
    for _ in range(sum(y) - sum(x)):
        nxt: dict[YFWord, int] = {}
        for w, c in frontier.items():
            for z in down_neighbors(w):
                nxt[z] = nxt.get(z, 0) + c
        frontier = nxt
    return frontier.get(YFWord(x), 0)


def descent_counts(y: YFWord) -> dict[YFWord, int]:
    """d(x, y) for every x below y, as one map; a single DP sweep from y."""
    out: dict[YFWord, int] = {}
    frontier = {YFWord(y): 1}
    out.update(frontier)
    for _ in range(sum(y)):
        nxt: dict[YFWord, int] = {}
        for w, c in frontier.items():
            for z in down_neighbors(w):
                nxt[z] = nxt.get(z, 0) + c
        frontier = nxt
        out.update(frontier)
    return out


def d_paths_formula(x: YFWord, y: YFWord) -> int:
    """The closed-form path count; equals d_paths_dp(x, y)."""
    if sum(y) < sum(x):
        raise ValueError("formula requires rank(y) >= rank(x)")
    gs = g_all(y)
    h = common_suffix_len(x, y)
    total = Fraction(0)
    for i in range(sum(x) + 1):
        prod = 1
        for G in gs:
            prod *= G - i
        total += f(x, i, h) * prod
    assert total.denominator == 1
    return int(total)


def d_from_empty(y: YFWord) -> int:
    """d(empty, y) = product of the g-values of y; empty product 1."""
    prod = 1
    for G in g_all(y):
        prod *= G
    return prod


def plancherel(n: int, v: YFWord) -> Fraction:
    """Plancherel weight d(empty, v)^2 / n! of a rank-n word."""
    if sum(v) != n:
        raise ValueError(f"word has rank {sum(v)}, expected {n}")
    return Fraction(d_from_empty(v) ** 2, factorial(n))
