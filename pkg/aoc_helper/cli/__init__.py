# aoc_helper/cli/__init__.py
from .run_config import DAYS, SOLVERS, RunConfig

__all__ = ["DAYS", "SOLVERS", "RunConfig"]
