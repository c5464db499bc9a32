# aoc_helper/cli/run_config.py
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from aoc_helper.utilities.errors import UsageError

DAYS = (16, 17, 21, 23, 24)
SOLVERS = ("sat", "oracle", "structural")

# (day, part) -> solvers accepted for it, first one is the default
TASK_SOLVERS: dict[tuple[int, int], tuple[str, ...]] = {
    (16, 1): ("sat",),
    (16, 2): ("sat", "oracle"),
    (17, 1): ("sat",),
    (17, 2): ("sat", "oracle"),
    (21, 1): ("sat", "oracle"),
    (21, 2): ("sat", "oracle"),
    (23, 1): ("sat",),
    (23, 2): ("sat", "oracle"),
    (24, 1): ("sat",),
    (24, 2): ("sat", "structural"),
}

# tasks whose default path actually builds a CNF instance
SAT_TASKS = frozenset({(17, 2), (23, 2), (24, 2)})

DEFAULT_PAIRS = 4
PART1_LAYERS = 2
PART2_LAYERS = 25


@dataclass(frozen=True)
class RunConfig:
    """
    One ``aoc <day> <part>`` invocation.

    ``solver`` names the method: ``sat`` is each task's primary method (for
    the maze and keypad days that is the search, not a SAT model), ``oracle``
    the brute-force cross-check, ``structural`` the wire pattern check.
    """

    day: int
    part: int
    input_path: Optional[Path] = None
    solver: str = "sat"
    layers: Optional[int] = None
    trainings: Optional[int] = None
    pairs: Optional[int] = None
    seed: int = 1
    dimacs: Optional[Path] = None
    bv_width: Optional[int] = None
    target: Optional[tuple[int, ...]] = None

    @property
    def task(self) -> tuple[int, int]:
        return (self.day, self.part)

    @property
    def effective_layers(self) -> int:
        if self.layers is not None:
            return self.layers
        return PART1_LAYERS if self.part == 1 else PART2_LAYERS

    @property
    def effective_pairs(self) -> int:
        return DEFAULT_PAIRS if self.pairs is None else self.pairs

    def validate(self) -> "RunConfig":
        """Reject flags that do not apply to the selected day and part."""
        if self.day not in DAYS:
            raise UsageError(f"day must be one of {', '.join(map(str, DAYS))}, got {self.day}")
        if self.part not in (1, 2):
            raise UsageError(f"part must be 1 or 2, got {self.part}")
        allowed = TASK_SOLVERS[self.task]
        if self.solver not in allowed:
            raise UsageError(
                f"--solver {self.solver} is not available for day {self.day} part {self.part} "
                f"(choose from {', '.join(allowed)})"
            )
        self._only_for("--layers", self.layers, self.day == 21)
        self._only_for("--trainings", self.trainings, self.task == (24, 2) and self.solver == "sat")
        self._only_for("--pairs", self.pairs, self.task == (24, 2))
        self._only_for("--bv-width", self.bv_width, self.task == (17, 2) and self.solver == "sat")
        self._only_for("--target", self.target, self.task == (17, 2))
        self._only_for("--dimacs", self.dimacs, self.task in SAT_TASKS and self.solver == "sat")
        for flag, value, low in (
            ("--layers", self.layers, 0),
            ("--trainings", self.trainings, 1),
            ("--pairs", self.pairs, 0),
            ("--seed", self.seed, 0),
            ("--bv-width", self.bv_width, 3),
        ):
            if value is not None and value < low:
                raise UsageError(f"{flag} must be >= {low}, got {value}")
        return self

    def _only_for(self, flag: str, value: object, applies: bool) -> None:
        if value is not None and not applies:
            raise UsageError(f"{flag} does not apply to day {self.day} part {self.part} with --solver {self.solver}")
