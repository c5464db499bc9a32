# aoc_helper/search/__init__.py
from .cost_search import CostTable, GoalPath, dijkstra_all, dijkstra_goal
from .memo_table import ZERO, Derivation, LexObjective, MemoTable, memo_min

__all__ = [
    "CostTable",
    "GoalPath",
    "dijkstra_all",
    "dijkstra_goal",
    "ZERO",
    "Derivation",
    "LexObjective",
    "MemoTable",
    "memo_min",
]
