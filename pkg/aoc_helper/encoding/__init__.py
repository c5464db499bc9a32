# aoc_helper/encoding/__init__.py
"""
Compilers from gates, cardinality, finite domains and bit-vectors to CNF.
"""

from .cnf_encode import (
    CardinalityContext,
    FdVar,
    MaximizeResult,
    all_different,
    at_least_k,
    at_most_k,
    at_most_one,
    build_counter,
    exactly_one,
    fd_less_than,
    fd_var,
    gate_and,
    gate_and_many,
    gate_eq,
    gate_ite,
    gate_not,
    gate_or,
    gate_xor,
    maximize_true_count,
)
from .bitvec import (
    BitDecision,
    BitVec,
    MinimizeResult,
    bv_add,
    bv_const,
    bv_drop,
    bv_eq,
    bv_eq_const,
    bv_minimize,
    bv_new,
    bv_shr_var,
    bv_take,
    bv_value,
    bv_xor,
    bv_zext,
)

__all__ = [
    "CardinalityContext",
    "FdVar",
    "MaximizeResult",
    "all_different",
    "at_least_k",
    "at_most_k",
    "at_most_one",
    "build_counter",
    "exactly_one",
    "fd_less_than",
    "fd_var",
    "gate_and",
    "gate_and_many",
    "gate_eq",
    "gate_ite",
    "gate_not",
    "gate_or",
    "gate_xor",
    "maximize_true_count",
    "BitDecision",
    "BitVec",
    "MinimizeResult",
    "bv_add",
    "bv_const",
    "bv_drop",
    "bv_eq",
    "bv_eq_const",
    "bv_minimize",
    "bv_new",
    "bv_shr_var",
    "bv_take",
    "bv_value",
    "bv_xor",
    "bv_zext",
]
