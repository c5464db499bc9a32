from enum import Enum


class PuzzleFileType(Enum):
    """
    Enum naming the text formats the parsers understand.
    """

    DIMACS = "DIMACS"
    NETWORK = "NETWORK"  # Day 23 edge list
    DEVICE = "DEVICE"  # Day 17 registers + program
    CIRCUIT = "CIRCUIT"  # Day 24 wires + gates
    MAZE = "MAZE"  # Day 16 grid
    CODES = "CODES"  # Day 21 door codes
    UNKNOWN = "UNKNOWN"
