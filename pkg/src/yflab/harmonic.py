"""The scalar functions of the lattice: f, g, q, the beta polynomial, and pi.

All values are exact rationals (``fractions.Fraction``).  The central object
is the three-argument function f(x, y, z), defined for a word x, a rank
0 <= y <= rank(x) and a count 0 <= z <= length(x):

At z = 0, f(x, y, 0) is nonzero iff x splits as head + tail with
rank(tail) == y, and then equals

    1 / (product over the tail digits, left to right from the split, of the
         *negated* running digit sums)
    * 1 / (product over the head digits, right to left from the split, of
           the running digit sums),

with empty products equal to 1.  At z > 0 it is defined by recursion on the
last digit of x:

    f(x+1, 0, z) = f(x+1, 0, 0)
    f(x+1, y, z) = f(x+1, y, 0) + f(x, y-1, z-1)        for y > 0
    f(x+2, y, z) = f(x+11, y, z+1) / (1 - y)            for y != 1
    f(x+2, 1, z) = 0

where x+d denotes appending digit d.  The recursion terminates because the
2-rule hands off to a word ending in 11 whose 1-rules strictly shrink the
word.  Values are memoized on the exact triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .words import YFWord, split_by_rank, suffix_ranks


def _digits_of(x) -> tuple[int, ...]:
    # accepts a finite word or anything carrying a finite `core` of digits
    # (an infinite tail of 1s contributes no 2s, so g/pi see only the core)
    return tuple(getattr(x, "core", x))


@lru_cache(maxsize=None)
def _f(x: tuple[int, ...], y: int, z: int) -> Fraction:
    if z == 0:
        total = 0
        s = len(x)
        while total < y:
            s -= 1
            total += x[s]
        if total != y:
            return Fraction(0)
        den = 1
        run = 0
        for k in range(s, len(x)):
            run += x[k]
            den *= -run
        run = 0
        for k in range(s - 1, -1, -1):
            run += x[k]
            den *= run
        return Fraction(1, den)
    if x[-1] == 1:
        if y == 0:
            return _f(x, 0, 0)
        return _f(x, y, 0) + _f(x[:-1], y - 1, z - 1)
    if y == 1:
        return Fraction(0)
    return _f(x[:-1] + (1, 1), y, z + 1) / (1 - y)


def f(x: YFWord, y: int, z: int) -> Fraction:
    """Evaluate f(x, y, z); see the module docstring for the definition."""
    if not 0 <= y <= sum(x):
        raise ValueError(f"y={y} out of range 0..{sum(x)}")
    if not 0 <= z <= len(x):
        raise ValueError(f"z={z} out of range 0..{len(x)}")
    return _f(tuple(x), y, z)


def g_all(x) -> tuple[int, ...]:
    """All values g(x, 1), ..., g(x, twos(x)).

    With beta_i the lengths of the maximal 1-runs between 2s counted from
    the right, g(x, j) = beta_0 + ... + beta_{j-1} + 2j - 1.  Equivalently
    (asserted at runtime): the rank of the suffix of x up to and including
    the j-th 2 from the right, minus 1.
    """
    digits = _digits_of(x)
    out = []
    total = 0
    for k in range(len(digits) - 1, -1, -1):
        total += digits[k]
        if digits[k] == 2:
            out.append(total - 1)
    runs = []
    c = 0
    for k in range(len(digits) - 1, -1, -1):
        if digits[k] == 1:
            c += 1
        else:
            runs.append(c)
            c = 0
    assert out == [sum(runs[:j]) + 2 * j - 1 for j in range(1, len(runs) + 1)]
    return tuple(out)


def g(x, j: int) -> int:
    """The j-th g-value of x, 1 <= j <= twos(x)."""
    values = g_all(x)
    if not 1 <= j <= len(values):
        raise ValueError(f"index {j} out of range 1..{len(values)}")
    return values[j - 1]


def q(x: YFWord) -> Fraction:
    """1 / (product of the ranks of all nonempty suffixes of x)."""
    den = 1
    for r in suffix_ranks(x):
        den *= r
    return Fraction(1, den)


def pi(x) -> Fraction:
    """Product of (g-1)/g over the g-values of x exceeding 1; empty product 1."""
    out = Fraction(1)
    for G in g_all(x):
        if G > 1:
            out *= Fraction(G - 1, G)
    return out


def pi_k(x, k: int) -> Fraction:
    """Product of (g-k)/g over the g-values of x exceeding k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    out = Fraction(1)
    for G in g_all(x):
        if G > k:
            out *= Fraction(G - k, G)
    return out


def pi_split(v: YFWord, y: int) -> Optional[tuple[Fraction, Fraction]]:
    """The factorization pi(v) = pi(head + 1^y) * pi(tail) across a rank-y split.

    Returns (head_part, tail_part), or None when v has no suffix of rank y.
    """
    parts = split_by_rank(v, y)
    if parts is None:
        return None
    head, tail = parts
    return pi(head + (1,) * y), pi(tail)


@dataclass(frozen=True)
class BetaPolynomial:
    """A polynomial in beta with exact rational coefficients c0, c1, ...

    Trailing zero coefficients are trimmed; evaluation at a rational point
    is exact.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial given degree -1."""
        return len(self.coeffs) - 1

    def __call__(self, beta: Union[Fraction, int]) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * beta + c
        return acc

    def div_one_minus_beta(self) -> tuple["BetaPolynomial", Fraction]:
        """Exact division by (1 - beta): returns (quotient, remainder).

        The remainder is the value at beta = 1; division is exact iff it
        vanishes.
        """
        r = self(Fraction(1))
        qc: list[Fraction] = []
        prev = Fraction(0)
        for k, c in enumerate(self.coeffs):
            cur = c - r if k == 0 else c + prev
            qc.append(cur)
            prev = cur
        if qc:
            qc.pop()  # top coefficient of (1-beta)*quotient is -quotient[-1]
        return BetaPolynomial(tuple(qc)), r

    def __eq__(self, other) -> bool:
        if isinstance(other, BetaPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"BetaPolynomial({[str(c) for c in self.coeffs]})"


def d_beta(x: YFWord) -> BetaPolynomial:
    """The polynomial sum over i of f(x, i, 0) * beta^i."""
    return BetaPolynomial(tuple(f(x, i, 0) for i in range(sum(x) + 1)))


def d_beta_eval(x: YFWord, beta: Fraction) -> Fraction:
    """Exact value of the beta polynomial of x at a rational beta in (0, 1]."""
    if not 0 < beta <= 1:
        raise ValueError(f"beta must lie in (0, 1], got {beta}")
    return d_beta(x)(beta)


def format_rational(value: Fraction) -> str:
    """Render as 'p/q' in lowest terms, or a bare integer when q == 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or an integer string into an exact rational."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
