from fractions import Fraction as Fr

import pytest

from yflab.boundary import TailOnesWord, d1_prime, mu
from yflab.magic import (
    build_table,
    column_bound,
    column_sum_closed_form,
    level_product,
    magic_entry,
    symbolic_entry,
)
from yflab.pathcount import d_from_empty
from yflab.words import EPSILON, enumerate_level, parse, split_by_rank

from reference_values import MAGIC5

W2 = TailOnesWord.parse("2")
W22 = TailOnesWord.parse("22")
HALF = Fr(1, 2)


def test_symbolic_cells_match_reference_at_rank_5():
    seen = set()
    for v in enumerate_level(5):
        expected_row = MAGIC5[v.text]
        seen.add(v.text)
        for y in range(6):
            cell = symbolic_entry(5, v, y)
            expected = expected_row[y]
            if expected is None:
                assert cell is None
            else:
                coeff, tail_text, beta_exp, omb2_exp = expected
                assert cell.coeff == coeff
                assert cell.tail == parse(tail_text)
                assert cell.beta_exp == beta_exp
                assert cell.one_minus_beta2_exp == omb2_exp
    assert seen == set(MAGIC5)


def test_numeric_entries_factor_through_symbolic_cells():
    for v in enumerate_level(5):
        for y in range(6):
            cell = symbolic_entry(5, v, y)
            value = magic_entry(W2, HALF, 5, v, y)
            if cell is None:
                assert value == 0
            else:
                assert value == (cell.coeff * d1_prime(cell.tail, W2)
                                 * HALF ** cell.beta_exp
                                 * Fr(3, 4) ** cell.one_minus_beta2_exp)


def test_entry_examples_for_122():
    v = parse("122")
    beta = Fr(1, 3)
    omb2 = 1 - beta * beta
    for w in (W2, W22, TailOnesWord.parse("eps")):
        assert magic_entry(w, beta, 5, v, 0) == Fr(3, 40) * omb2 ** 3
        assert magic_entry(w, beta, 5, v, 1) == 0
        assert magic_entry(w, beta, 5, v, 2) == Fr(3, 6) * d1_prime(parse("2"), w) * beta ** 2 * omb2 ** 2


def test_entry_preconditions():
    with pytest.raises(ValueError):
        magic_entry(W2, Fr(1, 2), 5, parse("21"), 0)
    with pytest.raises(ValueError):
        magic_entry(W2, Fr(1, 2), 5, parse("122"), 6)
    with pytest.raises(ValueError):
        magic_entry(W2, Fr(2), 5, parse("122"), 0)


def test_table_shape_and_trivial_table():
    table = build_table(W22, HALF, 5)
    assert len(table.entries) == 8
    assert all(len(row) == 6 for row in table.entries)
    t0 = build_table(W22, HALF, 0)
    assert t0.entries == ((Fr(1),),)


def test_rows_dominate_the_measure():
    for w in (W2, W22):
        for beta in (Fr(1, 4), HALF, Fr(1)):
            table = build_table(w, beta, 6)
            for i, v in enumerate(table.level.words):
                assert mu(w, beta, v) <= sum(table.entries[i], Fr(0))


def test_column_sums():
    for w in (W2, W22):
        for n in range(7):
            table = build_table(w, HALF, n)
            # column_sum itself asserts the closed single-level form
            assert table.column_sum(n) == HALF ** n
            for y in range(n + 1):
                total = table.column_sum(y)
                assert total <= column_bound(HALF, n, y)


def test_column_closed_form_is_w_independent():
    for n in range(7):
        for y in range(n + 1):
            reference = column_sum_closed_form(HALF, n, y)
            for w in (W2, W22):
                table = build_table(w, HALF, n)
                assert sum(row[y] for row in table.entries) == reference


def test_level_product_equality_to_rank_14():
    from yflab.harmonic import q
    for n in range(15):
        for y in range(n + 1):
            total = sum(q(xp) * d_from_empty(xp + (1,) * y)
                        for xp in enumerate_level(n - y))
            assert total == level_product(n, y)


def test_table_total_bound():
    from yflab.magic import column_sum, table_total
    for w in (W2, W22):
        for beta in (Fr(1, 4), HALF, Fr(3, 4)):
            for n in range(7):
                table = build_table(w, beta, n)
                total = table_total(table)
                assert total <= 1 + 1 / beta
                assert total == sum(column_sum(table, y) for y in range(n + 1))
                assert total >= column_sum(table, 0)


def test_zero_pattern():
    # absent split forces a zero entry; a present split gives zero exactly
    # when the kernel value of the tail vanishes or beta = 1 kills the
    # (1 - beta^2) factor of a nonempty head
    for w in (W2, W22):
        for beta in (HALF, Fr(1)):
            for n in range(7):
                table = build_table(w, beta, n)
                for i, v in enumerate(table.level.words):
                    for y in range(n + 1):
                        parts = split_by_rank(v, y)
                        value = table.entries[i][y]
                        if parts is None:
                            assert value == 0
                        else:
                            head, tail = parts
                            should_vanish = (d1_prime(tail, w) == 0
                                             or (beta == 1 and head.length > 0))
                            assert (value == 0) == should_vanish


def test_csv_export():
    table = build_table(W22, HALF, 3)
    numeric = table.to_csv()
    lines = numeric.splitlines()
    assert lines[0] == "word,0,1,2,3"
    assert len(lines) == 4
    assert table.to_csv() == numeric  # deterministic
    symbolic = build_table(W22, HALF, 5).to_csv(symbolic=True)
    row122 = next(line for line in symbolic.splitlines() if line.startswith("122,"))
    assert "(3/40;eps;0;3)" in row122
    assert "(1/2;2;2;2)" in row122  # 3/6 in lowest terms
