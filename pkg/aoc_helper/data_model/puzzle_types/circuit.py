# aoc_helper/data_model/puzzle_types/circuit.py
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

from aoc_helper.data_model.interfaces import GateOp

_BIT_WIRE = re.compile(r"^([xyz])(\d+)$")


def bit_wire(prefix: str, index: int) -> str:
    """Canonical name of bit ``index`` of the ``x``/``y``/``z`` bus."""
    return f"{prefix}{index:02d}"


def wire_bit(name: str) -> tuple[str, int] | None:
    """Split ``"z07"`` into ``("z", 7)``; ``None`` for internal wires."""
    match = _BIT_WIRE.match(name)
    return (match.group(1), int(match.group(2))) if match else None


@dataclass(frozen=True)
class Gate:
    """Two-input gate ``in1 OP in2 -> out``."""

    op: GateOp
    in1: str
    in2: str
    out: str

    @property
    def inputs(self) -> tuple[str, str]:
        return (self.in1, self.in2)


@dataclass(frozen=True)
class Circuit:
    """
    Gate network over named wires.

    ``initial`` holds the given input bits. ``width`` is the number of ``x``
    bits and ``output_width`` the number of ``z`` bits.
    """

    initial: Mapping[str, int]
    gates: tuple[Gate, ...]
    driver: dict[str, int] = field(init=False, repr=False, compare=False)
    consumers: dict[str, tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        driver: dict[str, int] = {}
        consumers: dict[str, list[int]] = {}
        for index, gate in enumerate(self.gates):
            if gate.out in driver:
                raise ValueError(f"wire {gate.out!r} is driven by more than one gate")
            driver[gate.out] = index
            for wire in gate.inputs:
                consumers.setdefault(wire, []).append(index)
        object.__setattr__(self, "driver", driver)
        object.__setattr__(self, "consumers", {w: tuple(g) for w, g in consumers.items()})

    def _bus(self, prefix: str) -> list[str]:
        names = set(self.initial) | set(self.driver) | set(self.consumers)
        found = sorted(
            (bit[1], name) for name in names if (bit := wire_bit(name)) and bit[0] == prefix
        )
        return [name for _, name in found]

    @property
    def x_wires(self) -> list[str]:
        return self._bus("x")

    @property
    def y_wires(self) -> list[str]:
        return self._bus("y")

    @property
    def z_wires(self) -> list[str]:
        return self._bus("z")

    @property
    def width(self) -> int:
        return len(self.x_wires)

    @property
    def output_width(self) -> int:
        return len(self.z_wires)

    @property
    def wires(self) -> set[str]:
        return set(self.initial) | set(self.driver) | set(self.consumers)

    def input_value(self, prefix: str) -> int:
        """Integer held on the ``x`` or ``y`` bus by the initial values."""
        return sum(self.initial.get(bit_wire(prefix, i), 0) << i for i in range(self.width))
