# aoc_helper/__init__.py
"""Puzzle solvers built on a small incremental SAT toolkit."""

__version__ = "0.1.0"

# from aoc_helper import cli, controllers, data_model, encoding, sat, search, utilities
__all__ = ["cli", "controllers", "data_model", "encoding", "sat", "search", "utilities"]
