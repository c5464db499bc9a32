# aoc_helper/sat/__init__.py
"""
Self-contained CDCL SAT solving: clause store, engine and models.
"""

from .solver_config import SolverConfig, SolverStats
from .model import Model, SolveResult
from .cdcl_solver import CdclSolver
from .cnf_instance import CnfInstance, lit_sign, lit_var

__all__ = [
    "SolverConfig",
    "SolverStats",
    "Model",
    "SolveResult",
    "CdclSolver",
    "CnfInstance",
    "lit_sign",
    "lit_var",
]
