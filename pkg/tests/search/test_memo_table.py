from __future__ import annotations

import pytest

from aoc_helper.search import ZERO, Derivation, LexObjective, MemoTable, memo_min
from aoc_helper.utilities.errors import RecursionCycleError


# ---------------------------
# LexObjective
# ---------------------------


def test_lex_objective_orders_primary_first():
    assert LexObjective(1, 9) < LexObjective(2, 0)
    assert LexObjective(2, 1) < LexObjective(2, 3)
    assert LexObjective(1, 2) + LexObjective(3, 4) == LexObjective(4, 6)
    assert ZERO == LexObjective(0, 0)


# ---------------------------
# MemoTable
# ---------------------------


def _staircase(n: int):
    """Climb ``n`` steps in strides of 1 or 2; each stride costs (1, stride)."""
    if n == 0:
        yield Derivation(ZERO)
        return
    for stride in (1, 2):
        if stride <= n:
            yield Derivation(LexObjective(1, stride), (n - stride,), (stride,))


def test_memo_table_minimum_and_witness():
    """Positive: fewest strides wins, witness concatenates emits in order."""
    # Arrange
    table = MemoTable(_staircase)

    # Act
    objective, witness = table.solve(5)

    # Assert
    assert objective == LexObjective(3, 5)
    assert sum(witness) == 5
    assert len(witness) == 3


def test_memo_table_ties_keep_first_derivation():
    def derive(key):
        if key == "root":
            yield Derivation(LexObjective(1, 0), emit=("first",))
            yield Derivation(LexObjective(1, 0), emit=("second",))

    assert memo_min("root", derive) == (LexObjective(1, 0), ("first",))


def test_memo_table_caches_and_counts():
    # Arrange
    table = MemoTable(_staircase)

    # Act
    table.solve(10)
    misses = table.misses
    table.solve(10)

    # Assert
    assert misses == 11, "each key 0..10 is derived once"
    assert table.misses == misses
    assert table.hits > 0
    assert len(table) == 11
    table.clear()
    assert len(table) == 0 and table.hits == 0


def test_memo_table_underivable_key_is_none():
    """Edge: a derivation through an unsolvable subkey is skipped."""

    def derive(key):
        if key == "top":
            yield Derivation(LexObjective(0, 1), ("dead",))
            yield Derivation(LexObjective(5, 0), emit=("alive",))

    table = MemoTable(derive)
    assert table.solve("dead") is None
    assert table.solve("top") == (LexObjective(5, 0), ("alive",))


def test_memo_table_detects_cycles():
    """Negative: a key that needs itself is an error, not infinite recursion."""

    def derive(key):
        yield Derivation(ZERO, ((key + 1) % 3,))

    with pytest.raises(RecursionCycleError):
        MemoTable(derive).solve(0)


def test_memo_min_shares_a_table():
    table = MemoTable(_staircase)
    memo_min(4, _staircase, table)
    assert memo_min(3, _staircase, table) == (LexObjective(2, 3), table.solve(3)[1])
    assert table.hits >= 1
