"""Words over {1,2} and the Young-Fibonacci graph structure.

A vertex of the Young-Fibonacci lattice is a finite word over the alphabet
{1, 2}, stored left to right exactly as printed.  The *rank* of a word is
its digit sum, the *length* its digit count.  "Suffix" always means the
rightmost digits.

Edges up from a word x:
  * replace the leftmost 1 of x with a 2 (if x contains a 1);
  * insert a 1 at any position up to and including the position of the
    leftmost 1; if x has no 1, at any of the length+1 positions.

Edges down are the inverses:
  * turn any 2 of the maximal leading run of 2s into a 1;
  * delete the leftmost 1 (if any).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional


class YFWord(tuple):
    """An immutable word over {1,2}; behaves as a tuple of ints."""

    __slots__ = ()

    def __new__(cls, digits=()) -> "YFWord":
        digits = tuple(digits)
        if any(d not in (1, 2) for d in digits):
            raise ValueError(f"digits must be 1 or 2, got {digits!r}")
        return tuple.__new__(cls, digits)

    @classmethod
    def from_text(cls, text: str) -> "YFWord":
        """Parse a digit string; the empty string is the empty word."""
        if any(c not in "12" for c in text):
            raise ValueError(f"word text must consist of '1'/'2' characters: {text!r}")
        return cls(int(c) for c in text)

    @property
    def text(self) -> str:
        return "".join(str(d) for d in self)

    @property
    def rank(self) -> int:
        """Digit sum."""
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def ones(self) -> int:
        return sum(1 for d in self if d == 1)

    @property
    def twos(self) -> int:
        """Number of 2s (distinct from the path count between two words)."""
        return sum(1 for d in self if d == 2)

    def __add__(self, other) -> "YFWord":
        return YFWord(tuple.__add__(self, tuple(other)))

    def __repr__(self) -> str:
        return f"YFWord({self.text!r})"


EPSILON = YFWord()


def parse(text: str) -> YFWord:
    """Parse a digit string over {1,2}; '' yields the empty word."""
    return YFWord.from_text(text)


def ones_word(k: int) -> YFWord:
    """The word 1^k."""
    return YFWord((1,) * k)


def suffix(x: YFWord, a: int) -> YFWord:
    """The last a digits of x."""
    if not 0 <= a <= len(x):
        raise ValueError(f"suffix length {a} out of range for word of length {len(x)}")
    return YFWord(x[len(x) - a:])


def prefix(x: YFWord, a: int) -> YFWord:
    """The first length-a digits of x, so that prefix(x,a) + suffix(x,a) == x."""
    if not 0 <= a <= len(x):
        raise ValueError(f"suffix length {a} out of range for word of length {len(x)}")
    return YFWord(x[:len(x) - a])


def suffix_ranks(x) -> tuple[int, ...]:
    """Ranks of the suffixes of x by length: entry i-1 is the rank of the last i digits."""
    out = []
    total = 0
    for d in reversed(x):
        total += d
        out.append(total)
    return tuple(out)


def split_by_rank(v: YFWord, y: int) -> Optional[tuple[YFWord, YFWord]]:
    """Split v = head + tail with rank(tail) == y, if such a split exists.

    Returns (head, tail) or None when no suffix of v has rank exactly y
    (a 2 straddles that rank).
    """
    if not 0 <= y <= sum(v):
        raise ValueError(f"target rank {y} out of range for word of rank {sum(v)}")
    total = 0
    a = 0
    while total < y:
        total += v[len(v) - 1 - a]
        a += 1
    if total != y:
        return None
    return YFWord(v[:len(v) - a]), YFWord(v[len(v) - a:])


def common_suffix_len(x, y) -> int:
    """Number of digits in the longest common suffix of x and y."""
    k = 0
    for a, b in zip(reversed(x), reversed(y)):
        if a != b:
            break
        k += 1
    return k


def common_suffix_rank(x, y) -> int:
    """Digit sum of the longest common suffix of x and y."""
    total = 0
    for a, b in zip(reversed(x), reversed(y)):
        if a != b:
            break
        total += a
    return total


def up_neighbors(x: YFWord) -> set[YFWord]:
    """All words covering x (rank of each result is rank(x) + 1)."""
    out: set[YFWord] = set()
    try:
        p = x.index(1)
    except ValueError:
        p = len(x)
    if p < len(x):
        out.add(YFWord(x[:p] + (2,) + x[p + 1:]))
        positions = range(p + 1)
    else:
        positions = range(len(x) + 1)
    for i in positions:
        out.add(YFWord(x[:i] + (1,) + x[i:]))
    return out


def down_neighbors(y: YFWord) -> set[YFWord]:
    """All words covered by y: exactly the x with y in up_neighbors(x)."""
    out: set[YFWord] = set()
    m = 0
    while m < len(y) and y[m] == 2:
        m += 1
    for j in range(m):
        out.add(YFWord(y[:j] + (1,) + y[j + 1:]))
    if m < len(y):
        out.add(YFWord(y[:m] + y[m + 1:]))
    return out


@dataclass(frozen=True)
class Level:
    """All words of one rank, in the canonical generation order."""

    n: int
    words: tuple[YFWord, ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[YFWord]:
        return iter(self.words)


@lru_cache(maxsize=None)
def _level_words(n: int) -> tuple[YFWord, ...]:
    if n == 0:
        return (EPSILON,)
    if n == 1:
        return (YFWord((1,)),)
    ones = tuple(YFWord((1,) + w) for w in _level_words(n - 1))
    twos = tuple(YFWord((2,) + w) for w in _level_words(n - 2))
    return ones + twos


def enumerate_level(n: int) -> Level:
    """All words of rank n, 1-branch before 2-branch recursively; count Fib(n+1)."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    words = _level_words(n)
    assert len(words) == fibonacci(n + 1)
    return Level(n, words)


@lru_cache(maxsize=None)
def fibonacci(k: int) -> int:
    """Fibonacci numbers with fibonacci(1) == fibonacci(2) == 1."""
    if k <= 0:
        return 0
    a, b = 1, 1
    for _ in range(k - 1):
        a, b = b, a + b
    return a
