# aoc_helper/controllers/__init__.py
from . import ccrev, clique, keypad, maze, wires

__all__ = ["ccrev", "clique", "keypad", "maze", "wires"]
