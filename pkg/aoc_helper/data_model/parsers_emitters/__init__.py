# aoc_helper/data_model/parsers_emitters/__init__.py
from .circuit_parser_emitter import CircuitParserEmitter, find_cycle_wire, gate_graph
from .codes_parser_emitter import CodesParserEmitter
from .device_parser_emitter import DeviceParserEmitter
from .dimacs_parser_emitter import DimacsParserEmitter, read_dimacs, write_dimacs
from .maze_parser_emitter import MazeParserEmitter
from .network_parser_emitter import NetworkParserEmitter

__all__ = [
    "CircuitParserEmitter",
    "CodesParserEmitter",
    "DeviceParserEmitter",
    "DimacsParserEmitter",
    "MazeParserEmitter",
    "NetworkParserEmitter",
    "find_cycle_wire",
    "gate_graph",
    "read_dimacs",
    "write_dimacs",
]
