from __future__ import annotations

import numpy as np
import pytest

from aoc_helper.data_model.interfaces import GateOp, Heading
from aoc_helper.data_model.puzzle_types import (
    DIRECTIONAL_PAD,
    NUMERIC_PAD,
    Circuit,
    Device,
    Gate,
    Grid,
    Machine,
    Network,
    PoseState,
    bit_wire,
    wire_bit,
)

# ---------- Network ----------


def test_network_from_pairs_keeps_first_appearance_order():
    # Act
    net = Network.from_pairs([("ta", "ka"), ("ka", "de"), ("de", "ta")])

    # Assert
    assert net.vertices == ("ta", "ka", "de")
    assert net.has_edge(0, 2) and net.has_edge(2, 0)
    assert net.max_degree() == 2
    assert net.is_clique([0, 1, 2])


def test_network_rejects_self_loop():
    with pytest.raises(ValueError):
        Network(("aa",), frozenset({(0, 0)}))


# ---------- Device / Machine ----------


def test_device_rejects_codes_outside_octal():
    with pytest.raises(ValueError):
        Device(0, 0, 0, (8, 0))


def test_machine_halts_past_program_end():
    # Arrange
    machine = Machine((0, 3))

    # Act
    machine.ip = 2

    # Assert
    assert machine.halted


# ---------- Circuit ----------


def test_bit_wire_names_round_trip():
    assert bit_wire("z", 7) == "z07"
    assert wire_bit("z07") == ("z", 7)
    assert wire_bit("abc") is None


def test_circuit_buses_and_driver_index():
    # Arrange
    gates = (
        Gate(GateOp.XOR, "x00", "y00", "z00"),
        Gate(GateOp.AND, "x00", "y00", "z01"),
    )

    # Act
    circuit = Circuit({"x00": 1, "y00": 1}, gates)

    # Assert
    assert circuit.width == 1
    assert circuit.z_wires == ["z00", "z01"]
    assert circuit.driver == {"z00": 0, "z01": 1}
    assert circuit.consumers["x00"] == (0, 1)
    assert circuit.input_value("x") == 1


def test_circuit_rejects_double_driver():
    """Negative: one wire, two gates."""
    gates = (Gate(GateOp.AND, "x00", "y00", "z00"), Gate(GateOp.OR, "x00", "y00", "z00"))
    with pytest.raises(ValueError):
        Circuit({}, gates)


# ---------- Grid ----------


def test_grid_is_one_based():
    # Arrange
    cells = np.array([list("###"), list("#S#"), list("#E#"), list("###")], dtype="<U1")

    # Act
    grid = Grid(cells=cells, start=(2, 2), end=(3, 2))

    # Assert
    assert grid.at(2, 2) == "S"
    assert grid.is_open(3, 2) and not grid.is_open(1, 1)
    assert grid.open_cells() == [(2, 2), (3, 2)]
    assert PoseState(2, 2, Heading.DOWN).cell == (2, 2)


# ---------- Keypad ----------


def test_keypads_match_puzzle_layout():
    assert NUMERIC_PAD.position("A") == (3, 2)
    assert NUMERIC_PAD.key_at(NUMERIC_PAD.gap) is None
    assert DIRECTIONAL_PAD.position("<") == (1, 0)
    assert DIRECTIONAL_PAD.step((1, 0), Heading.UP) is None, "moving from '<' up hits the gap"
    assert DIRECTIONAL_PAD.step((0, 2), Heading.LEFT) == (0, 1)


def test_keypad_unknown_key():
    with pytest.raises(ValueError):
        NUMERIC_PAD.position("B")
