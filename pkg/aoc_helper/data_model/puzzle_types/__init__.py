# aoc_helper/data_model/puzzle_types/__init__.py
from .circuit import Circuit, Gate, bit_wire, wire_bit
from .device import Device, Machine
from .grid import END, OPEN, START, WALL, Grid, PoseState
from .keypad import DIRECTIONAL_PAD, NUMERIC_PAD, Keypad
from .network import Network

__all__ = [
    "Circuit",
    "Gate",
    "bit_wire",
    "wire_bit",
    "Device",
    "Machine",
    "Grid",
    "PoseState",
    "WALL",
    "OPEN",
    "START",
    "END",
    "Keypad",
    "NUMERIC_PAD",
    "DIRECTIONAL_PAD",
    "Network",
]
