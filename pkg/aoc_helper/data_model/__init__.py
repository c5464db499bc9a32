# aoc_helper/data_model/__init__.py
"""
Typed puzzle data model: interfaces/enums, records and text parsers.
"""

from .interfaces import GateOp, Heading, IClauseSink, IParserEmitter, PuzzleFileType, SatStatus
from .puzzle_types import (
    DIRECTIONAL_PAD,
    NUMERIC_PAD,
    Circuit,
    Device,
    Gate,
    Grid,
    Keypad,
    Machine,
    Network,
    PoseState,
)

__all__ = [
    "GateOp",
    "Heading",
    "IClauseSink",
    "IParserEmitter",
    "PuzzleFileType",
    "SatStatus",
    "Circuit",
    "Device",
    "Gate",
    "Grid",
    "Keypad",
    "Machine",
    "Network",
    "PoseState",
    "NUMERIC_PAD",
    "DIRECTIONAL_PAD",
]
