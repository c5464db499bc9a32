# aoc_helper/data_model/interfaces/i_clause_sink.py
"""
Structural type for anything the CNF encoders can write into.

Encoders in ``aoc_helper.encoding`` only allocate variables and append
clauses, so they accept any object with this shape. ``CnfInstance`` is the
concrete implementation; tests occasionally use it directly.

Literals are signed ints in DIMACS convention: ``v`` is the positive literal
of variable ``v`` and ``-v`` its negation.
"""

from __future__ import annotations

from typing import Iterable, Protocol, runtime_checkable


@runtime_checkable
class IClauseSink(Protocol):
    """
    Variable allocator plus clause store.

    Attributes
    ----------
    num_vars : int
        Highest allocated variable index.
    true_lit : int
        A literal fixed true by a unit clause (allocated on first access).
    """

    @property
    def num_vars(self) -> int: ...

    @property
    def true_lit(self) -> int: ...

    def new_var(self) -> int:
        """Allocate and return the next variable index."""
        ...

    def add_clause(self, literals: Iterable[int]) -> None:
        """Normalize and store one clause."""
        ...

    def is_constant(self, lit: int) -> bool:
        """``True`` when ``lit`` is ``true_lit`` or its negation (never allocates)."""
        ...
