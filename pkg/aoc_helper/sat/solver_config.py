# aoc_helper/sat/solver_config.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class SolverConfig:
    """
    Tuning knobs of the CDCL engine.

    The defaults are the policies the rest of the toolkit is tested with;
    changing them never changes a verdict, only models and timing.
    """

    restart_first: int = 100
    restart_factor: float = 1.5
    var_decay: float = 0.95
    glue_keep: int = 4
    learned_ratio: float = 2.0
    phase_saving: bool = True
    conflict_budget: Optional[int] = None

    def __post_init__(self) -> None:
        if self.restart_first < 1:
            raise ValueError(f"restart_first must be >= 1, got {self.restart_first}")
        if self.restart_factor < 1.0:
            raise ValueError(f"restart_factor must be >= 1.0, got {self.restart_factor}")
        if not 0.0 < self.var_decay < 1.0:
            raise ValueError(f"var_decay must be in (0, 1), got {self.var_decay}")


@dataclass
class SolverStats:
    """Counters accumulated over the lifetime of one solver."""

    solves: int = 0
    conflicts: int = 0
    decisions: int = 0
    propagations: int = 0
    restarts: int = 0
    reductions: int = 0
    learned: int = field(default=0)

    def summary(self) -> str:
        return (
            f"solves={self.solves} conflicts={self.conflicts} decisions={self.decisions} "
            f"propagations={self.propagations} restarts={self.restarts} "
            f"reductions={self.reductions} learned={self.learned}"
        )
