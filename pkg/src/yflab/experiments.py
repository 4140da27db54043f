"""Concentration sets, measure sweeps, and the exhaustive identity suite.

Sweeps over large ranks use a left-extension walk of the level: levels are
generated by prepending a digit, and the whole vector f(v, i, h(v, w)) for
i = 0..rank(v) transforms under prepending by a single exact division per
entry, because f(x, y, z) = f(ax, y, z) * (rank(ax) - y) whenever y and z
stay inside the shorter word's ranges.  Prepending a 2 additionally sets
the entry at rank(x)+1 to zero.  The two entries at the top of the new
vector are filled by a right-end unwind of the recursion.  Only when the
common suffix with w grows (the current word is a full suffix of w and the
prepended digit matches) is the vector recomputed from scratch; at most one
word per level is affected.  The walk is validated against the direct
formulas in the test suite.
"""

from __future__ import annotations

import csv
import io
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Optional, Sequence, Union

from . import harmonic
from .boundary import TailOnesWord, d1_prime, d_beta_prime, h_infinite, mu
from .harmonic import BetaPolynomial, d_beta, format_rational, g_all, pi, pi_split, q
from .magic import build_table, column_bound, column_sum_closed_form, level_product
from .pathcount import d_from_empty
from .words import YFWord, enumerate_level, prefix, suffix

Mode = str  # "suffix" | "pi"
Param = Union[int, Fraction]


# ---------------------------------------------------------------------------
# Concentration sets
# ---------------------------------------------------------------------------

def q_sets(w: TailOnesWord, n: int, l: int) -> tuple[set[YFWord], set[YFWord]]:
    """Partition rank-n words by common-suffix rank with w: >= l versus < l."""
    if n < 0 or l < 0:
        raise ValueError("n and l must be nonnegative")
    inside, outside = set(), set()
    for v in enumerate_level(n):
        (inside if h_infinite(v, w).rank >= l else outside).add(v)
    return inside, outside


def r_sets(w: TailOnesWord, beta: Fraction, n: int,
           eps: Fraction) -> tuple[set[YFWord], set[YFWord]]:
    """Partition rank-n words by whether pi(v) lies in the open interval
    (pi(w) (beta - eps), pi(w) (beta + eps))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if eps <= 0:
        raise ValueError("eps must be positive")
    if not 0 < beta <= 1:
        raise ValueError(f"beta must lie in (0, 1], got {beta}")
    piw = pi(w)
    lo, hi = piw * (beta - eps), piw * (beta + eps)
    inside, outside = set(), set()
    for v in enumerate_level(n):
        (inside if lo < pi(v) < hi else outside).add(v)
    return inside, outside


# ---------------------------------------------------------------------------
# Fast level walk
# ---------------------------------------------------------------------------

def _f_top(digits: Sequence[int], z: int, prefix_ranks: Sequence[int]) -> Fraction:
    """f(x, rank(x), z) by unwinding the recursion along the right end of x.

    prefix_ranks[k] must be the rank of the first k+1 digits of x.  The
    current word is always x[:j] + 1^t, so its base value needs only the
    prefix ranks of x.
    """
    j, t = len(digits), 0
    rank = prefix_ranks[-1] if digits else 0
    mult = Fraction(1)
    acc = Fraction(0)

    def base() -> Fraction:
        den = 1
        for k in range(j):
            den *= prefix_ranks[k]
        r0 = prefix_ranks[j - 1] if j else 0
        for s in range(1, t + 1):
            den *= r0 + s
        return Fraction(-1 if (j + t) % 2 else 1, den)

    while True:
        if z == 0:
            return acc + mult * base()
        if t > 0:
            acc += mult * base()
            t -= 1
            z -= 1
            rank -= 1
        elif digits[j - 1] == 1:
            acc += mult * base()
            j -= 1
            z -= 1
            rank -= 1
        else:
            mult /= 1 - rank  # rank >= 2 here, never 1
            j -= 1
            t += 2
            z += 1


@dataclass(frozen=True)
class _Node:
    """Walk state for one word: the word, its f-vector at z = h, and carried scalars."""

    digits: tuple[int, ...]
    prefix_ranks: tuple[int, ...]
    fvec: tuple          # fvec[i] = f(digits, i, h) for i = 0..rank
    h: int               # common suffix length with w
    h_rank: int          # common suffix rank with w
    d_eps: int           # d(empty, digits)
    pi_val: Fraction

    @property
    def rank(self) -> int:
        return self.prefix_ranks[-1] if self.prefix_ranks else 0


def _root_node(exact: bool = True) -> _Node:
    one = Fraction(1) if exact else 1.0
    return _Node((), (), (one,), 0, 0, 1, Fraction(1))


def _child(node: _Node, alpha: int, w: TailOnesWord, exact: bool = True) -> _Node:
    """The walk state for alpha + word, built from the state for word."""
    digits = (alpha,) + node.digits
    pranks = (alpha,) + tuple(p + alpha for p in node.prefix_ranks)
    r = node.rank
    grows = node.h == len(node.digits) and w.digit_from_right(len(node.digits)) == alpha
    if grows:
        h = node.h + 1
        word = YFWord(digits)
        fvec = tuple(harmonic.f(word, i, h) for i in range(r + alpha + 1))
        if not exact:
            fvec = tuple(float(v) for v in fvec)
    else:
        h = node.h
        vals = [node.fvec[i] / (r + alpha - i) for i in range(r + 1)]
        if alpha == 2:
            vals.append(Fraction(0) if exact else 0.0)  # f(2x, rank(x)+1, z) = 0
        top = _f_top(digits, h, pranks)
        vals.append(top if exact else float(top))
        fvec = tuple(vals)
    h_rank = node.h_rank + (alpha if grows else 0)
    if alpha == 1:
        return _Node(digits, pranks, fvec, h, h_rank, node.d_eps, node.pi_val)
    G = r + 1  # the g-value contributed by the new leftmost 2
    pi_val = node.pi_val * Fraction(G - 1, G) if G > 1 else node.pi_val
    return _Node(digits, pranks, fvec, h, h_rank, node.d_eps * G, pi_val)


def _iter_leaves(node: _Node, n: int, w: TailOnesWord, exact: bool) -> Iterable[_Node]:
    stack = [node]
    while stack:
        cur = stack.pop()
        r = cur.rank
        if r == n:
            yield cur
            continue
        if r + 2 <= n:
            stack.append(_child(cur, 2, w, exact))
        stack.append(_child(cur, 1, w, exact))


def walk_level_masses(w: TailOnesWord, beta: Fraction, n: int) -> dict[YFWord, Fraction]:
    """All masses of one rank via the left-extension walk (exact)."""
    gs = g_all(w.core)
    weights = []
    power = Fraction(1)
    for i in range(n + 1):
        p = power
        for G in gs:
            p *= Fraction(G - i, G)
        weights.append(p)
        power *= beta
    out: dict[YFWord, Fraction] = {}
    for leaf in _iter_leaves(_root_node(), n, w, True):
        m = node_mass(leaf, weights)
        out[YFWord(leaf.digits)] = m
    return out


def node_mass(leaf: _Node, weights: Sequence) -> Fraction:
    """mu(v) = d(empty, v) * sum of fvec[i] * weights[i], weights[i] = beta^i * g-ratio(i)."""
    total = None
    for Fi, Wi in zip(leaf.fvec, weights):
        if Fi:
            total = Fi * Wi if total is None else total + Fi * Wi
    if total is None:
        total = weights[0] * 0
    return leaf.d_eps * total


# ---------------------------------------------------------------------------
# Concentration sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    n: int
    tail: Union[Fraction, float]
    head: Union[Fraction, float]


@dataclass(frozen=True)
class ConcentrationReport:
    """Per-rank tail masses of a boundary measure outside a concentration set."""

    mode: Mode                # "suffix" (common-suffix rank < l) or "pi" (pi(v) outside interval)
    w: TailOnesWord
    beta: Fraction
    parameter: Param          # l for suffix mode, eps for pi mode
    rows: tuple[SweepRow, ...]
    exact: bool = True

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["mode", "core", "beta", "param", "n", "tail", "head", "arithmetic"])
        core = self.w.core.text if len(self.w.core) else "eps"
        kind = "exact" if self.exact else "float-nonauthoritative"
        for row in self.rows:
            if self.exact:
                tail, head = format_rational(row.tail), format_rational(row.head)
            else:
                tail, head = repr(row.tail), repr(row.head)
            writer.writerow([self.mode, core, format_rational(self.beta),
                             str(self.parameter), str(row.n), tail, head, kind])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"mode={self.mode} core={self.w.core.text or 'eps'} "
                 f"beta={format_rational(self.beta)} param={self.parameter}"
                 + ("" if self.exact else "  [float, non-authoritative]")]
        for row in self.rows:
            tail = format_rational(row.tail) if self.exact else repr(row.tail)
            lines.append(f"  n={row.n}: tail={tail} (~{float(row.tail):.6g})")
        return "\n".join(lines) + "\n"


def _accumulate(w: TailOnesWord, n: int, start: _Node,
                betas: Sequence[Fraction],
                suffix_by_beta: Sequence[Sequence[int]],
                pi_by_beta: Sequence[Sequence[tuple[Fraction, Fraction]]],
                exact: bool):
    """Tail sums over one subtree, grouped per beta.

    Returns (totals, suffix_tails, pi_tails) aligned with the argument lists.
    """
    gs = g_all(w.core)
    zero = Fraction(0) if exact else 0.0
    weight_sets = []
    for beta in betas:
        weights = []
        power = Fraction(1)
        for i in range(n + 1):
            p = power
            for G in gs:
                p *= Fraction(G - i, G)
            weights.append(p if exact else float(p))
            power *= beta
        weight_sets.append(weights)
    totals = [zero for _ in betas]
    suffix_tails = [[zero for _ in ls] for ls in suffix_by_beta]
    pi_tails = [[zero for _ in ivs] for ivs in pi_by_beta]
    for leaf in _iter_leaves(start, n, w, exact):
        piv = leaf.pi_val
        for b, weights in enumerate(weight_sets):
            m = node_mass(leaf, weights)
            totals[b] += m
            for k, l in enumerate(suffix_by_beta[b]):
                if leaf.h_rank < l:
                    suffix_tails[b][k] += m
            for k, (lo, hi) in enumerate(pi_by_beta[b]):
                if not lo < piv < hi:
                    pi_tails[b][k] += m
    return totals, suffix_tails, pi_tails


def _subtree_roots(n: int, w: TailOnesWord, split_rank: int, exact: bool) -> list[_Node]:
    """Nodes at the first rank >= split_rank; their subtrees partition the level."""
    roots: list[_Node] = []

    def rec(node: _Node):
        if node.rank >= split_rank or node.rank == n:
            roots.append(node)
            return
        rec(_child(node, 1, w, exact))
        if node.rank + 2 <= n:
            rec(_child(node, 2, w, exact))

    rec(_root_node(exact))
    return roots


def _worker(args):
    w, n, node, betas, suffix_by_beta, pi_by_beta, exact = args
    return _accumulate(w, n, node, betas, suffix_by_beta, pi_by_beta, exact)


_SPLIT_RANK = 8


def sweep_many(w: TailOnesWord, n_list: Sequence[int],
               suffix_params: Sequence[tuple[Fraction, int]] = (),
               pi_params: Sequence[tuple[Fraction, Fraction]] = (),
               jobs: int = 1, exact: bool = True,
               ) -> dict[tuple[Mode, Fraction, Param, int], Union[Fraction, float]]:
    """Tail masses for many (mode, beta, parameter) pairs in one walk per rank.

    Returns a map (mode, beta, parameter, n) -> tail mass.  In exact mode the
    per-rank total is asserted to be exactly 1.
    """
    betas: list[Fraction] = []
    for beta, _ in tuple(suffix_params) + tuple(pi_params):
        if not 0 < beta <= 1:
            raise ValueError(f"beta must lie in (0, 1], got {beta}")
        if beta not in betas:
            betas.append(beta)
    piw = pi(w)
    suffix_by_beta = [[l for (b, l) in suffix_params if b == beta] for beta in betas]
    pi_by_beta = [[(piw * (beta - e), piw * (beta + e)) for (b, e) in pi_params if b == beta]
                  for beta in betas]
    results: dict[tuple[Mode, Fraction, Param, int], Union[Fraction, float]] = {}
    for n in n_list:
        if jobs > 1 and n >= _SPLIT_RANK + 2:
            roots = _subtree_roots(n, w, _SPLIT_RANK, exact)
            tasks = [(w, n, r, betas, suffix_by_beta, pi_by_beta, exact) for r in roots]
            with multiprocessing.get_context("fork").Pool(jobs) as pool:
                parts = pool.map(_worker, tasks)
        else:
            parts = [_accumulate(w, n, _root_node(exact), betas,
                                 suffix_by_beta, pi_by_beta, exact)]
        zero = Fraction(0) if exact else 0.0
        totals = [zero for _ in betas]
        suffix_tails = [[zero for _ in ls] for ls in suffix_by_beta]
        pi_tails = [[zero for _ in ivs] for ivs in pi_by_beta]
        for tot, st, pt in parts:
            for b in range(len(betas)):
                totals[b] += tot[b]
                for k in range(len(st[b])):
                    suffix_tails[b][k] += st[b][k]
                for k in range(len(pt[b])):
                    pi_tails[b][k] += pt[b][k]
        if exact:
            assert all(t == 1 for t in totals), f"level {n} masses sum to {totals}"
        for b, beta in enumerate(betas):
            for k, l in enumerate(suffix_by_beta[b]):
                results[("suffix", beta, l, n)] = suffix_tails[b][k]
            pis = [e for (bb, e) in pi_params if bb == beta]
            for k, e in enumerate(pis):
                results[("pi", beta, e, n)] = pi_tails[b][k]
    return results


def concentration_sweep(mode: Mode, w: TailOnesWord, beta: Fraction, parameter: Param,
                        n_list: Sequence[int], jobs: int = 1,
                        exact: bool = True) -> ConcentrationReport:
    """Exact tail mass outside the concentration set, for each rank in n_list."""
    if mode not in ("suffix", "pi"):
        raise ValueError(f"unknown mode {mode!r}")
    n_list = list(n_list)
    if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be nonempty and strictly ascending")
    if mode == "suffix":
        if int(parameter) < 0:
            raise ValueError("l must be nonnegative")
        tails = sweep_many(w, n_list, suffix_params=[(beta, int(parameter))],
                           jobs=jobs, exact=exact)
        key = ("suffix", beta, int(parameter))
    else:
        eps = Fraction(parameter)
        if eps <= 0:
            raise ValueError("eps must be positive")
        tails = sweep_many(w, n_list, pi_params=[(beta, eps)], jobs=jobs, exact=exact)
        key = ("pi", beta, eps)
    rows = tuple(SweepRow(n, tails[key + (n,)], 1 - tails[key + (n,)]) for n in n_list)
    return ConcentrationReport(mode, w, Fraction(beta), key[2], rows, exact)


# ---------------------------------------------------------------------------
# Identity suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityResult:
    name: str
    instances: int
    failures: int
    first_counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class SuiteReport:
    max_rank: int
    results: tuple[IdentityResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "instances", "status", "first_counterexample"])
        for r in self.results:
            writer.writerow([r.name, str(r.instances), "pass" if r.passed else "FAIL",
                             r.first_counterexample or ""])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            extra = "" if r.passed else f"  first counterexample: {r.first_counterexample}"
            lines.append(f"{r.name:<14} {r.instances:>7} instances  {status}{extra}")
        verdict = "ALL IDENTITIES PASS" if self.all_passed else "IDENTITY FAILURES PRESENT"
        lines.append(verdict)
        return "\n".join(lines) + "\n"


class _Recorder:
    def __init__(self):
        self.instances = 0
        self.failures = 0
        self.first: Optional[str] = None

    def check(self, ok: bool, witness: Callable[[], str]):
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = witness()

    def result(self, name: str) -> IdentityResult:
        return IdentityResult(name, self.instances, self.failures, self.first)


def _all_words(max_rank: int):
    for n in range(max_rank + 1):
        yield from enumerate_level(n)


DEFAULT_BETA_GRID = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))
DEFAULT_CORES = ("eps", "2", "22", "212")
MAX_SUITE_RANK = 12


def _check_evtuh5(ctx, rec):
    """sum over i of f(x, i, 0) vanishes for every nonempty x."""
    for x in _all_words(ctx.max_rank):
        if len(x) == 0:
            continue
        total = sum(ctx.f(x, i, 0) for i in range(sum(x) + 1))
        rec.check(total == 0, lambda x=x, t=total: f"x={x.text}: sum={t}")


def _check_evtuh7(ctx, rec):
    """f(x, y, z) = f(ax, y, z) * (rank(ax) - y) for a prepended digit a."""
    for alpha in (1, 2):
        for x in _all_words(ctx.max_rank - alpha):
            ax = YFWord((alpha,) + tuple(x))
            for y in range(sum(x) + 1):
                for z in range(len(x) + 1):
                    lhs = ctx.f(x, y, z)
                    rhs = ctx.f(ax, y, z) * (sum(ax) - y)
                    rec.check(lhs == rhs,
                              lambda x=x, a=alpha, y=y, z=z: f"a={a} x={x.text} y={y} z={z}")


def _check_evtuh11(ctx, rec):
    """-y * f(x+1, y, 0) = f(x, y-1, 0) for appended 1 and y >= 1."""
    for x in _all_words(ctx.max_rank - 1):
        x1 = YFWord(tuple(x) + (1,))
        for y in range(1, sum(x1) + 1):
            rec.check(-y * ctx.f(x1, y, 0) == ctx.f(x, y - 1, 0),
                      lambda x=x, y=y: f"x={x.text} y={y}")


def _check_evtuh12(ctx, rec):
    """(1 - y) * f(x+11, y, 0) = f(x+2, y, 0)."""
    for x in _all_words(ctx.max_rank - 2):
        x11 = YFWord(tuple(x) + (1, 1))
        x2 = YFWord(tuple(x) + (2,))
        for y in range(sum(x2) + 1):
            rec.check((1 - y) * ctx.f(x11, y, 0) == ctx.f(x2, y, 0),
                      lambda x=x, y=y: f"x={x.text} y={y}")


def _check_evtuh91(ctx, rec):
    """f(2x, y, length(x)) = f(2x, y, length(2x)) over the full y range."""
    for x in _all_words(ctx.max_rank - 2):
        ax = YFWord((2,) + tuple(x))
        for y in range(sum(ax) + 1):
            rec.check(ctx.f(ax, y, len(x)) == ctx.f(ax, y, len(ax)),
                      lambda x=x, y=y: f"x={x.text} y={y}")


def _check_evtuh92(ctx, rec):
    """f(1x, y, length(x)) = f(1x, y, length(1x)) for y <= rank(x)."""
    for x in _all_words(ctx.max_rank - 1):
        ax = YFWord((1,) + tuple(x))
        for y in range(sum(x) + 1):
            rec.check(ctx.f(ax, y, len(x)) == ctx.f(ax, y, len(ax)),
                      lambda x=x, y=y: f"x={x.text} y={y}")


def _check_evtuh93(ctx, rec):
    """f(2x, rank(x) + 1, z) = 0 for every valid z."""
    for x in _all_words(ctx.max_rank - 2):
        ax = YFWord((2,) + tuple(x))
        for z in range(len(ax) + 1):
            rec.check(ctx.f(ax, sum(x) + 1, z) == 0,
                      lambda x=x, z=z: f"x={x.text} z={z}")


def _check_q_recurrence(ctx, rec):
    """q(x') = rank(x) * q(x) when x = a + x'."""
    for x in _all_words(ctx.max_rank):
        if len(x) == 0:
            continue
        xp = YFWord(x[1:])
        rec.check(q(xp) == sum(x) * q(x), lambda x=x: f"x={x.text}")


def _check_odnoitozhe(ctx, rec):
    """q(x) = f(x, 0, 0)."""
    for x in _all_words(ctx.max_rank):
        rec.check(q(x) == ctx.f(x, 0, 0), lambda x=x: f"x={x.text}")


def _check_kusok(ctx, rec):
    """d'_beta(x, w) decomposes over suffix splits of x through d_beta and d'_1."""
    for x in _all_words(ctx.max_rank):
        for w in ctx.ws:
            for beta in ctx.betas:
                lhs = d_beta_prime(x, w, beta)
                rhs = Fraction(0)
                for i in range(len(x) + 1):
                    tail = suffix(x, i)
                    head = prefix(x, i)
                    rhs += beta ** sum(tail) * d_beta(head)(beta) * d1_prime(tail, w)
                rec.check(lhs == rhs,
                          lambda x=x, w=w, b=beta: f"x={x.text} core={w.core.text or 'eps'} beta={b}")


def _check_razbivaem(ctx, rec):
    """d(empty, head + tail) = d(empty, tail) * d(empty, head + 1^rank(tail))."""
    for x in _all_words(ctx.max_rank):
        for i in range(len(x) + 1):
            head, tail = prefix(x, i), suffix(x, i)
            lhs = d_from_empty(x)
            rhs = d_from_empty(tail) * d_from_empty(head + (1,) * sum(tail))
            rec.check(lhs == rhs, lambda x=x, i=i: f"x={x.text} split={i}")


def _check_meexy(ctx, rec):
    """pi factors across every rank split: pi(v) = pi(head + 1^y) * pi(tail)."""
    for v in _all_words(ctx.max_rank):
        for y in range(sum(v) + 1):
            parts = pi_split(v, y)
            if parts is None:
                continue
            head_part, tail_part = parts
            rec.check(pi(v) == head_part * tail_part, lambda v=v, y=y: f"v={v.text} y={y}")


def _check_delitsa(ctx, rec):
    """The beta polynomial divides by (1 - beta) exactly length(x) times, no more."""
    for x in _all_words(ctx.max_rank):
        poly = d_beta(x)
        ok = True
        for _ in range(len(x)):
            poly, remainder = poly.div_one_minus_beta()
            if remainder != 0:
                ok = False
                break
        if ok:
            ok = poly(Fraction(1)) != 0
        rec.check(ok, lambda x=x: f"x={x.text}")


def _binom_partial(ctx, x: YFWord, i: int) -> Fraction:
    length = len(x)
    return sum((ctx.f(x, j, 0) * comb(length - 1 + i - j, length - 1)
                for j in range(min(i, sum(x)) + 1)), Fraction(0))


def _check_binomische1(ctx, rec):
    """The binomial partial sums vanish for rank(x) - length(x) < i <= rank(x)."""
    for x in _all_words(ctx.max_rank):
        if len(x) == 0:
            continue
        for i in range(sum(x) - len(x) + 1, sum(x) + 1):
            rec.check(_binom_partial(ctx, x, i) == 0, lambda x=x, i=i: f"x={x.text} i={i}")


def _check_binomische2(ctx, rec):
    """The quotient by (1-beta)^length(x) equals the binomial partial-sum polynomial."""
    for x in _all_words(ctx.max_rank):
        if len(x) == 0:
            continue
        poly = d_beta(x)
        ok = True
        for _ in range(len(x)):
            poly, remainder = poly.div_one_minus_beta()
            if remainder != 0:
                ok = False
                break
        if ok:
            expected = BetaPolynomial(tuple(_binom_partial(ctx, x, i)
                                            for i in range(sum(x) - len(x) + 1)))
            ok = poly == expected
        rec.check(ok, lambda x=x: f"x={x.text}")


def _check_schyot(ctx, rec):
    """The two-sided recomposition of the binomial partial sums, length(x) >= 2."""
    for x in _all_words(ctx.max_rank):
        L, R = len(x), sum(x)
        if L < 2:
            continue
        for i in range(1, R + 1):
            lhs = _binom_partial(ctx, x, i) * (R - i)
            first = sum((ctx.f(x, j, 0) * comb(L - 2 + i - j, L - 1)
                         for j in range(min(i - 1, R) + 1)), Fraction(0)) * (R - i - L + 1)
            second = sum(((R - j) * ctx.f(x, j, 0) * comb(L - 2 + i - j, L - 2)
                          for j in range(min(i, R) + 1)), Fraction(0))
            rec.check(lhs == first + second, lambda x=x, i=i: f"x={x.text} i={i}")


def _check_binom1(ctx, rec):
    """Binomial partial sums are bounded by q(x) * C(length(x), i) for i <= length(x)."""
    for x in _all_words(ctx.max_rank):
        if len(x) == 0:
            continue
        for i in range(len(x) + 1):
            rec.check(_binom_partial(ctx, x, i) <= q(x) * comb(len(x), i),
                      lambda x=x, i=i: f"x={x.text} i={i}")


def _check_mamka2(ctx, rec):
    """d_beta(x) <= q(x) * (1 - beta^2)^length(x) on the beta grid."""
    for x in _all_words(ctx.max_rank):
        for beta in ctx.betas:
            lhs = d_beta(x)(beta)
            rhs = q(x) * (1 - beta * beta) ** len(x)
            rec.check(lhs <= rhs, lambda x=x, b=beta: f"x={x.text} beta={b}")


def _check_dostalo(ctx, rec):
    """Sum over rank-(n-y) words of q * d(empty, word + 1^y) equals the closed product."""
    for n in range(ctx.max_rank + 1):
        for y in range(n + 1):
            total = sum((q(xp) * d_from_empty(xp + (1,) * y)
                         for xp in enumerate_level(n - y)), Fraction(0))
            rec.check(total == level_product(n, y), lambda n=n, y=y: f"n={n} y={y}")


def _tables(ctx):
    for w in ctx.ws:
        for beta in ctx.betas:
            for n in range(ctx.max_rank + 1):
                yield build_table(w, beta, n)


def _check_sum(ctx, rec):
    """Every table column sums to its closed single-level form."""
    for table in _tables(ctx):
        for y in range(table.n + 1):
            total = sum((row[y] for row in table.entries), Fraction(0))
            closed = column_sum_closed_form(table.beta, table.n, y)
            rec.check(total == closed,
                      lambda t=table, y=y: f"core={t.w.core.text or 'eps'} beta={t.beta} "
                                           f"n={t.n} y={y}")


def _check_stolb(ctx, rec):
    """Every column sum respects the product bound."""
    for table in _tables(ctx):
        for y in range(table.n + 1):
            total = sum((row[y] for row in table.entries), Fraction(0))
            rec.check(total <= column_bound(table.beta, table.n, y),
                      lambda t=table, y=y: f"core={t.w.core.text or 'eps'} beta={t.beta} "
                                           f"n={t.n} y={y}")


def _check_lehamed(ctx, rec):
    """Column bounds sum to at most 1 + 1/beta; so does the whole table."""
    for beta in ctx.betas:
        for n in range(ctx.max_rank + 1):
            bound_total = sum((column_bound(beta, n, y) for y in range(n + 1)), Fraction(0))
            rec.check(bound_total <= 1 + 1 / beta, lambda b=beta, n=n: f"beta={b} n={n}")
    for table in _tables(ctx):
        total = sum((sum(row, Fraction(0)) for row in table.entries), Fraction(0))
        rec.check(total <= 1 + 1 / table.beta,
                  lambda t=table: f"core={t.w.core.text or 'eps'} beta={t.beta} n={t.n}")


def _check_zabe(ctx, rec):
    """Row sums dominate the measure: mu_{w,beta}(v) <= sum of row v."""
    for table in _tables(ctx):
        for i, v in enumerate(table.level.words):
            mass = mu(table.w, table.beta, v)
            rec.check(mass <= sum(table.entries[i], Fraction(0)),
                      lambda t=table, v=v: f"core={t.w.core.text or 'eps'} beta={t.beta} "
                                           f"n={t.n} v={v.text}")


IDENTITY_CHECKS: tuple[tuple[str, Callable], ...] = (
    ("evtuh5", _check_evtuh5),
    ("evtuh7", _check_evtuh7),
    ("evtuh11", _check_evtuh11),
    ("evtuh12", _check_evtuh12),
    ("evtuh91", _check_evtuh91),
    ("evtuh92", _check_evtuh92),
    ("evtuh93", _check_evtuh93),
    ("q_recurrence", _check_q_recurrence),
    ("odnoitozhe", _check_odnoitozhe),
    ("kusok", _check_kusok),
    ("razbivaem", _check_razbivaem),
    ("meexy", _check_meexy),
    ("delitsa", _check_delitsa),
    ("binomische1", _check_binomische1),
    ("binomische2", _check_binomische2),
    ("schyot", _check_schyot),
    ("binom1", _check_binom1),
    ("mamka2", _check_mamka2),
    ("dostalo", _check_dostalo),
    ("sum", _check_sum),
    ("stolb", _check_stolb),
    ("lehamed", _check_lehamed),
    ("zabe", _check_zabe),
)


@dataclass(frozen=True)
class _SuiteContext:
    max_rank: int
    betas: tuple[Fraction, ...]
    ws: tuple[TailOnesWord, ...]
    f: Callable


def identity_suite(max_rank: int,
                   beta_grid: Sequence[Fraction] = DEFAULT_BETA_GRID,
                   w_list: Sequence[TailOnesWord] = None,
                   f_impl: Callable = harmonic.f) -> SuiteReport:
    """Run every identity exhaustively up to max_rank over the beta/w grids.

    Failures become report rows, not exceptions.  f_impl exists as a test
    hook: substituting a corrupted f must make the coefficient-level
    identities fail with a concrete witness.
    """
    if max_rank > MAX_SUITE_RANK:
        raise ValueError(f"max_rank capped at {MAX_SUITE_RANK}")
    if w_list is None:
        w_list = tuple(TailOnesWord.parse(c) for c in DEFAULT_CORES)
    ctx = _SuiteContext(max_rank, tuple(beta_grid), tuple(w_list), f_impl)
    results = []
    for name, check in IDENTITY_CHECKS:
        rec = _Recorder()
        check(ctx, rec)
        results.append(rec.result(name))
    return SuiteReport(max_rank, tuple(results))
