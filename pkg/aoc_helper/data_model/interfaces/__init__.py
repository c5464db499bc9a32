# aoc_helper/data_model/interfaces/__init__.py
"""
Interfaces and Enums for the puzzle data model.
"""

from .enum_gate_op import GateOp
from .enum_heading import Heading
from .enum_puzzle_file_types import PuzzleFileType
from .enum_sat_status import SatStatus
from .i_clause_sink import IClauseSink
from .i_parser_emitter import IParserEmitter

__all__ = [
    "GateOp",
    "Heading",
    "PuzzleFileType",
    "SatStatus",
    "IClauseSink",
    "IParserEmitter",
]
