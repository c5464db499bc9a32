# aoc_helper/sat/model.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from aoc_helper.data_model.interfaces import SatStatus
from aoc_helper.utilities.errors import SolverBudgetError

from .solver_config import SolverStats


@dataclass(frozen=True)
class Model:
    """
    Total assignment for variables ``1..num_vars``.

    ``assignment[0]`` is a placeholder so that ``assignment[v]`` is the value of
    variable ``v``.
    """

    assignment: tuple[bool, ...]

    @property
    def num_vars(self) -> int:
        return len(self.assignment) - 1

    def __getitem__(self, var: int) -> bool:
        return self.assignment[var]

    def value(self, lit: int) -> bool:
        """Truth value of a signed literal."""
        return self.assignment[lit] if lit > 0 else not self.assignment[-lit]

    def true_vars(self) -> list[int]:
        return [v for v in range(1, len(self.assignment)) if self.assignment[v]]

    def satisfies(self, clauses: Iterable[Sequence[int]]) -> bool:
        """Clause-by-clause check; an empty clause is never satisfied."""
        return all(any(self.value(lit) for lit in clause) for clause in clauses)

    def count_true(self, lits: Iterable[int]) -> int:
        return sum(1 for lit in lits if self.value(lit))


@dataclass(frozen=True)
class SolveResult:
    """Verdict plus model (SAT only) and a snapshot of solver counters."""

    status: SatStatus
    model: Optional[Model] = None
    stats: SolverStats = field(default_factory=SolverStats)

    @property
    def is_sat(self) -> bool:
        return self.status is SatStatus.SAT

    def __bool__(self) -> bool:
        return self.is_sat

    def decided(self) -> "SolveResult":
        """This result, unless the conflict budget cut the solve short (``SolverBudgetError``)."""
        if self.status is SatStatus.UNKNOWN:
            raise SolverBudgetError(f"no verdict after {self.stats.conflicts} conflicts")
        return self
