from __future__ import annotations

import itertools

import pytest

from aoc_helper.encoding import (
    all_different,
    at_least_k,
    at_most_k,
    at_most_one,
    build_counter,
    exactly_one,
    fd_less_than,
    fd_var,
    gate_and,
    gate_and_many,
    gate_eq,
    gate_ite,
    gate_not,
    gate_or,
    gate_xor,
    maximize_true_count,
)
from aoc_helper.sat import CnfInstance, SolverConfig
from aoc_helper.utilities.errors import SolverBudgetError, UsageError


def _fix(lits, values):
    return [lit if value else -lit for lit, value in zip(lits, values)]


# ---------------------------
# Gates
# ---------------------------


@pytest.mark.parametrize(
    "encoder,truth",
    [
        (gate_and, lambda a, b: a and b),
        (gate_or, lambda a, b: a or b),
        (gate_xor, lambda a, b: a != b),
        (gate_eq, lambda a, b: a == b),
    ],
)
def test_binary_gates_match_truth_table(encoder, truth):
    # Arrange
    instance = CnfInstance()
    a, b = instance.new_vars(2)
    c = encoder(instance, a, b)

    for va, vb in itertools.product((False, True), repeat=2):
        # Act
        result = instance.solve(_fix([a, b], [va, vb]))

        # Assert
        assert result.is_sat
        assert result.model.value(c) == truth(va, vb), f"{encoder.__name__}({va}, {vb})"
        assert not instance.solve([*_fix([a, b], [va, vb]), -c if truth(va, vb) else c]).is_sat


def test_gate_ite_is_a_multiplexer():
    instance = CnfInstance()
    cond, then, other = instance.new_vars(3)
    out = gate_ite(instance, cond, then, other)
    for values in itertools.product((False, True), repeat=3):
        model = instance.solve(_fix([cond, then, other], values)).model
        expected = values[1] if values[0] else values[2]
        assert model.value(out) == expected, f"ite{values}"


def test_gates_fold_constants_without_clauses():
    """Positive: a constant input returns an existing literal and adds nothing."""
    # Arrange
    instance = CnfInstance()
    b = instance.new_var()
    t = instance.true_lit
    before = len(instance.clauses)

    # Act / Assert
    assert gate_and(instance, t, b) == b
    assert gate_and(instance, -t, b) == -t
    assert gate_or(instance, t, b) == t
    assert gate_or(instance, -t, b) == b
    assert gate_xor(instance, t, b) == -b
    assert gate_ite(instance, t, b, -t) == b
    assert gate_not(instance, b) == -b
    assert len(instance.clauses) == before


def test_gate_and_many_edges():
    instance = CnfInstance()
    lits = instance.new_vars(3)
    assert gate_and_many(instance, []) == instance.true_lit
    assert gate_and_many(instance, [lits[0]]) == lits[0]
    both = gate_and_many(instance, lits)
    assert not instance.solve([both, -lits[2]]).is_sat
    assert instance.solve([*lits]).model.value(both)


# ---------------------------
# Cardinality
# ---------------------------


def _count_check(n, k, encoder, admits):
    instance = CnfInstance()
    lits = instance.new_vars(n)
    encoder(instance, lits, k)
    for values in itertools.product((False, True), repeat=n):
        sat = instance.solve(_fix(lits, values)).is_sat
        assert sat == admits(sum(values)), f"n={n} k={k} values={values}"


@pytest.mark.parametrize("k", range(0, 6))
def test_at_most_k_exhaustive(k):
    _count_check(5, k, at_most_k, lambda count: count <= k)


@pytest.mark.parametrize("k", range(0, 6))
def test_at_least_k_exhaustive(k):
    _count_check(5, k, at_least_k, lambda count: count >= k)


def test_cardinality_rejects_k_out_of_range():
    instance = CnfInstance()
    lits = instance.new_vars(3)
    with pytest.raises(UsageError):
        at_most_k(instance, lits, 4)
    with pytest.raises(UsageError):
        at_least_k(instance, lits, -1)


def test_enabled_by_guards_the_constraint():
    """Positive: with the guard false any count is allowed."""
    # Arrange
    instance = CnfInstance()
    lits = instance.new_vars(4)
    guard = instance.new_var()
    at_most_k(instance, lits, 1, enabled_by=guard)

    # Act / Assert
    assert instance.solve([-guard, *lits]).is_sat
    assert not instance.solve([guard, lits[0], lits[1]]).is_sat


def test_counter_context_outputs_and_ranges():
    # Arrange
    instance = CnfInstance()
    lits = instance.new_vars(4)
    ctx = build_counter(instance, lits, 3)

    # Act
    model = instance.solve([lits[0], lits[2], -lits[1], -lits[3]]).model

    # Assert
    assert [model.value(v) for v in ctx.top] == [True, True, False]
    assert model.value(ctx.at_least(2)) and model.value(ctx.at_most(2))
    assert all(len(row) == min(i + 1, 3) for i, row in enumerate(ctx.counter_vars)), "rows are ragged"
    with pytest.raises(UsageError):
        ctx.at_least(4)
    with pytest.raises(UsageError):
        ctx.at_most(3)


def test_exactly_one_and_at_most_one():
    instance = CnfInstance()
    lits = instance.new_vars(3)
    exactly_one(instance, lits)
    assert not instance.solve([-lits[0], -lits[1], -lits[2]]).is_sat
    assert not instance.solve([lits[0], lits[2]]).is_sat
    at_most_one(instance, lits)
    assert instance.solve([lits[1]]).is_sat


# ---------------------------
# Finite domains
# ---------------------------


def _enumerate_values(instance, variables):
    seen = set()
    while (result := instance.solve()).is_sat:
        values = tuple(v.value(result.model) for v in variables)
        seen.add(values)
        instance.add_clause([-v.selectors[x] for v, x in zip(variables, values)])
    return seen


def test_all_different_yields_permutations():
    instance = CnfInstance()
    variables = [fd_var(instance, 3) for _ in range(3)]
    all_different(instance, variables)
    assert _enumerate_values(instance, variables) == set(itertools.permutations(range(3)))


def test_all_different_pigeonhole_is_unsat():
    """Edge: more variables than values is an unsatisfiable encoding, not an error."""
    instance = CnfInstance()
    variables = [fd_var(instance, 3) for _ in range(4)]
    all_different(instance, variables)
    assert not instance.solve().is_sat


def test_fd_less_than_orders_values():
    instance = CnfInstance()
    a, b = fd_var(instance, 4), fd_var(instance, 4)
    fd_less_than(instance, a, b)
    assert _enumerate_values(instance, [a, b]) == {(x, y) for x in range(4) for y in range(4) if x < y}


def test_fd_var_rejects_empty_domain():
    with pytest.raises(UsageError):
        fd_var(CnfInstance(), 0)


def test_all_different_needs_common_domain():
    instance = CnfInstance()
    with pytest.raises(UsageError):
        all_different(instance, [fd_var(instance, 2), fd_var(instance, 3)])


# ---------------------------
# Objective
# ---------------------------


def test_maximize_true_count_finds_optimum_and_keeps_instance_usable():
    # Arrange: choose from five items, with conflicts 1-2 and 3-4
    instance = CnfInstance()
    lits = instance.new_vars(5)
    instance.add_clause([-lits[0], -lits[1]])
    instance.add_clause([-lits[2], -lits[3]])

    # Act
    result = maximize_true_count(instance, lits)

    # Assert
    assert result.k_max == 3
    assert result.model.count_true(lits) == 3
    assert instance.solve().is_sat, "strengthening must go through assumptions only"


def test_maximize_respects_upper_bound():
    instance = CnfInstance()
    lits = instance.new_vars(4)
    result = maximize_true_count(instance, lits, upper_bound=2)
    assert result.k_max >= 2


def test_maximize_unsat_instance_is_none():
    instance = CnfInstance()
    lits = instance.new_vars(2)
    instance.add_clause([])
    assert maximize_true_count(instance, lits) is None


def test_maximize_stops_on_exhausted_conflict_budget():
    """Negative: a budget-limited solve is not mistaken for an upper bound."""
    # Arrange: a 6x5 assignment grid whose largest matching has 5 cells
    instance = CnfInstance(config=SolverConfig(conflict_budget=1))
    grid = [instance.new_vars(5) for _ in range(6)]
    for row in grid:
        at_most_one(instance, row)
    for column in zip(*grid):
        at_most_one(instance, column)

    # Act / Assert
    with pytest.raises(SolverBudgetError):
        maximize_true_count(instance, [lit for row in grid for lit in row])
