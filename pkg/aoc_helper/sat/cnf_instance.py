# aoc_helper/sat/cnf_instance.py
"""
Growable CNF clause database with an attached incremental solver.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional, Sequence

from aoc_helper.utilities.errors import UsageError

from .cdcl_solver import CdclSolver
from .model import SolveResult
from .solver_config import SolverConfig

log = logging.getLogger(__name__)


def lit_var(lit: int) -> int:
    """Variable index of a signed literal."""
    return lit if lit > 0 else -lit


def lit_sign(lit: int) -> bool:
    """``True`` for a positive literal."""
    return lit > 0


class CnfInstance:
    """
    Clause store plus variable allocator.

    Clauses are normalized on insertion: duplicate literals are removed
    (first occurrence kept), tautologies are dropped, and an empty clause marks
    the instance trivially unsatisfiable. Once ``true_lit`` has been allocated,
    clauses mentioning it are simplified against it.

    Parameters
    ----------
    num_vars : int
        Variables to pre-allocate.
    config : SolverConfig, optional
        Tuning for the solver created on the first ``solve`` call.
    """

    def __init__(self, num_vars: int = 0, config: Optional[SolverConfig] = None) -> None:
        if num_vars < 0:
            raise UsageError(f"num_vars must be >= 0, got {num_vars}")
        self._num_vars = num_vars
        self.clauses: list[list[int]] = []
        self.config = config or SolverConfig()
        self._true_lit: Optional[int] = None
        self._trivially_unsat = False
        self._solver: Optional[CdclSolver] = None

    # region Variables

    @property
    def num_vars(self) -> int:
        return self._num_vars

    def new_var(self) -> int:
        self._num_vars += 1
        return self._num_vars

    def new_vars(self, count: int) -> list[int]:
        return [self.new_var() for _ in range(count)]

    @property
    def true_lit(self) -> int:
        """A variable forced true; ``-true_lit`` is the constant false."""
        if self._true_lit is None:
            self._true_lit = self.new_var()
            self.clauses.append([self._true_lit])
        return self._true_lit

    def is_constant(self, lit: int) -> bool:
        return self._true_lit is not None and lit_var(lit) == self._true_lit

    # endregion Variables

    # region Clauses

    @property
    def trivially_unsat(self) -> bool:
        return self._trivially_unsat

    @property
    def learned(self) -> list[list[int]]:
        return self._solver.learned if self._solver is not None else []

    def add_clause(self, literals: Iterable[int]) -> None:
        lits = list(dict.fromkeys(literals))
        for lit in lits:
            if not isinstance(lit, int) or lit == 0 or lit_var(lit) > self._num_vars:
                raise UsageError(
                    f"clause {lits} references unallocated variable {lit!r} "
                    f"(num_vars={self._num_vars})"
                )
        seen = set(lits)
        if any(-lit in seen for lit in lits):
            return
        if self._true_lit is not None:
            if self._true_lit in seen:
                return
            lits = [lit for lit in lits if lit != -self._true_lit]
        if not lits:
            self._trivially_unsat = True
        self.clauses.append(lits)

    def add_clauses(self, clauses: Iterable[Iterable[int]]) -> None:
        for clause in clauses:
            self.add_clause(clause)

    # endregion Clauses

    def solve(self, assumptions: Sequence[int] = ()) -> SolveResult:
        """
        Decide satisfiability under ``assumptions``.

        A SAT result's model satisfies every stored clause and every
        assumption. UNSAT means no assignment agrees with both. Learned clauses
        persist between calls.
        """
        for lit in assumptions:
            if lit == 0 or lit_var(lit) > self._num_vars:
                raise UsageError(f"assumption {lit!r} references an unallocated variable")
        if self._solver is None:
            self._solver = CdclSolver(self.config)
        result = self._solver.solve(self, assumptions)
        log.debug(
            "vars=%d clauses=%d assumptions=%d -> %s",
            self._num_vars, len(self.clauses), len(assumptions), result.status.value,
        )
        return result
