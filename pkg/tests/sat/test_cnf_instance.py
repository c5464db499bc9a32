from __future__ import annotations

import pytest

from aoc_helper.sat import CnfInstance, Model, lit_sign, lit_var
from aoc_helper.utilities.errors import UsageError


def test_add_clause_dedups_and_drops_tautologies():
    # Arrange
    instance = CnfInstance(num_vars=3)

    # Act
    instance.add_clause([1, 2, 1])
    instance.add_clause([3, -3])

    # Assert
    assert instance.clauses == [[1, 2]]


@pytest.mark.parametrize("clause", [[0], [4], [-5, 1]])
def test_add_clause_rejects_unallocated(clause):
    instance = CnfInstance(num_vars=3)
    with pytest.raises(UsageError):
        instance.add_clause(clause)


def test_true_lit_simplifies_clauses():
    """Positive: clauses with the true literal vanish; its negation is removed."""
    # Arrange
    instance = CnfInstance(num_vars=2)
    t = instance.true_lit

    # Act
    instance.add_clause([t, 1])
    instance.add_clause([-t, 2])

    # Assert
    assert instance.clauses == [[t], [2]]
    assert instance.is_constant(t) and instance.is_constant(-t)
    assert not instance.is_constant(1)


def test_new_vars_are_sequential():
    instance = CnfInstance()
    assert instance.new_vars(3) == [1, 2, 3]
    assert instance.num_vars == 3


def test_literal_helpers():
    assert lit_var(-7) == 7 and lit_var(7) == 7
    assert lit_sign(3) and not lit_sign(-3)


def test_model_value_and_counts():
    # Arrange
    model = Model((False, True, False, True))

    # Act / Assert
    assert model.num_vars == 3
    assert model.value(1) and model.value(-2)
    assert model.true_vars() == [1, 3]
    assert model.count_true([1, 2, -2, 3]) == 3
    assert model.satisfies([[1], [-2, 3]])
    assert not model.satisfies([[]]), "the empty clause is never satisfied"
