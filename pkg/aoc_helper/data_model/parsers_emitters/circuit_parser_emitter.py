# aoc_helper/data_model/parsers_emitters/circuit_parser_emitter.py
"""
Wire/gate listing::

    x00: 1
    y00: 0

    x00 AND y00 -> z00

Lines starting with ``#`` (for example the generator's ``# answer:`` sidecar)
are ignored.
"""

from __future__ import annotations

import logging
import re
from typing import Iterable, Optional

import networkx as nx

from aoc_helper.data_model.interfaces import GateOp, IParserEmitter, PuzzleFileType
from aoc_helper.data_model.puzzle_types import Circuit, Gate, wire_bit
from aoc_helper.utilities.core_util import is_null_or_whitespace, numbered_lines
from aoc_helper.utilities.errors import PuzzleParseError

log = logging.getLogger(__name__)

_INITIAL = re.compile(r"^([A-Za-z0-9_]+)\s*:\s*(\S+)$")
_GATE = re.compile(r"^([A-Za-z0-9_]+)\s+([A-Za-z]+)\s+([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)$")


def gate_graph(gates: Iterable[Gate]) -> nx.DiGraph:
    """Wire dependency graph: an edge ``in -> out`` per gate input."""
    graph = nx.DiGraph()
    for gate in gates:
        graph.add_node(gate.out)
        for wire in gate.inputs:
            graph.add_edge(wire, gate.out)
    return graph


def find_cycle_wire(gates: Iterable[Gate]) -> Optional[str]:
    """A wire on a combinational cycle, or ``None`` when the gates are acyclic."""
    graph = gate_graph(gates)
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        return None
    return str(cycle[0][0])


class CircuitParserEmitter(IParserEmitter[Circuit]):
    """Parse and emit adder-style gate networks."""

    file_format: PuzzleFileType = PuzzleFileType.CIRCUIT

    def parse(self, unparsed_string: str) -> Circuit:
        initial: dict[str, int] = {}
        gates: list[Gate] = []
        driven_at: dict[str, int] = {}
        for number, raw in numbered_lines(unparsed_string):
            if is_null_or_whitespace(raw) or raw.lstrip().startswith("#"):
                continue
            line = raw.strip()
            if m := _GATE.match(line):
                in1, op_text, in2, out = m.groups()
                try:
                    op = GateOp.from_text(op_text)
                except ValueError:
                    raise PuzzleParseError(f"unknown gate operator {op_text!r}", number, line) from None
                if out in driven_at:
                    raise PuzzleParseError(
                        f"wire {out!r} already driven on line {driven_at[out]}", number, line
                    )
                if out in initial or ((bit := wire_bit(out)) and bit[0] in "xy"):
                    raise PuzzleParseError(f"input wire {out!r} is driven by a gate", number, line)
                driven_at[out] = number
                gates.append(Gate(op, in1, in2, out))
                continue
            if m := _INITIAL.match(line):
                if gates:
                    raise PuzzleParseError("initial value after the gate section", number, line)
                wire, bit_text = m.groups()
                if bit_text not in ("0", "1"):
                    raise PuzzleParseError(f"bit must be 0 or 1, got {bit_text!r}", number, line)
                if wire in initial:
                    raise PuzzleParseError(f"wire {wire!r} initialized twice", number, line)
                initial[wire] = int(bit_text)
                continue
            raise PuzzleParseError("unrecognized line", number, line)

        if (wire := find_cycle_wire(gates)) is not None:
            raise PuzzleParseError(f"combinational cycle through wire {wire!r}", driven_at.get(wire))
        circuit = Circuit(initial, tuple(gates))
        log.debug("parsed circuit: %d inputs, %d gates", len(initial), len(gates))
        return circuit

    def emit(self, item: Circuit) -> str:
        def order(name: str) -> tuple[str, int, str]:
            bit = wire_bit(name)
            return (bit[0], bit[1], name) if bit else ("~", 0, name)

        lines = [f"{wire}: {item.initial[wire]}" for wire in sorted(item.initial, key=order)]
        lines.append("")
        lines.extend(f"{g.in1} {g.op.value} {g.in2} -> {g.out}" for g in item.gates)
        return "\n".join(lines) + "\n"
