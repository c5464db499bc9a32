# aoc_helper/controllers/wires.py
"""
Crossed wires: evaluate a gate network, generate faulty ripple-carry adders,
and find the swapped gate outputs.

Two repair strategies are provided:

- ``find_swaps_sat`` assigns ``2k`` slots to gates and asks the solver for a
  slot assignment under which the circuit adds every training input
  correctly. Candidates are verified on fresh inputs (exhaustively up to
  ``EXHAUSTIVE_WIDTH`` bits) and failures are fed back as new trainings.
- ``ripple_structural_check`` flags wires whose surroundings do not look like
  a textbook ripple-carry cell.
"""

from __future__ import annotations

import logging
import math
import random
import string
from itertools import zip_longest
from pathlib import Path
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Optional, Sequence, Union

import networkx as nx

from aoc_helper.data_model.interfaces import GateOp
from aoc_helper.data_model.parsers_emitters import CircuitParserEmitter, find_cycle_wire, gate_graph
from aoc_helper.data_model.puzzle_types import Circuit, Gate, bit_wire, wire_bit
from aoc_helper.encoding import (
    BitVec,
    FdVar,
    all_different,
    bv_add,
    bv_const,
    fd_less_than,
    fd_var,
    gate_and,
    gate_and_many,
    gate_or,
    gate_xor,
)
from aoc_helper.sat import CnfInstance
from aoc_helper.utilities.core_util import read_puzzle_text
from aoc_helper.utilities.errors import (
    CircuitEvaluationError,
    GeneratorError,
    NoConsistentSwapError,
    UnsupportedShapeError,
    UsageError,
)

log = logging.getLogger(__name__)

DEFAULT_TRAININGS = 40
REFERENCE_WIDTH = 45
MAX_TRAININGS = 400
VERIFY_SAMPLES = 1000
EXHAUSTIVE_WIDTH = 8
MAX_GENERATOR_TRIES = 1000
COUNTEREXAMPLES_PER_ROUND = 4

EncodedHook = Callable[[CnfInstance], None]
SwapPair = tuple[str, str]

_GATE_ENCODERS = {GateOp.AND: gate_and, GateOp.OR: gate_or, GateOp.XOR: gate_xor}


def parse_circuit(text: str) -> Circuit:
    return CircuitParserEmitter().parse(text)


def load_circuit(path: Union[str, Path]) -> Circuit:
    return parse_circuit(read_puzzle_text(path))


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

def evaluate_wires(circuit: Circuit, inputs: Mapping[str, int]) -> dict[str, int]:
    """
    Value of every wire in topological order.

    Values are ints used as bit lanes, so one call can evaluate many input
    samples at once.
    """
    try:
        order = list(nx.topological_sort(gate_graph(circuit.gates)))
    except nx.NetworkXUnfeasible:
        wire = find_cycle_wire(circuit.gates)
        raise CircuitEvaluationError(f"combinational cycle through wire {wire!r}") from None
    values = dict(inputs)
    for wire in order:
        index = circuit.driver.get(wire)
        if index is None:
            continue
        gate = circuit.gates[index]
        missing = [w for w in gate.inputs if w not in values]
        if missing:
            raise CircuitEvaluationError(f"wire {missing[0]!r} is neither an input nor driven by a gate")
        values[wire] = gate.op.apply(values[gate.in1], values[gate.in2])
    return values


def _z_lanes(circuit: Circuit, values: Mapping[str, int]) -> list[int]:
    lanes: dict[int, int] = {}
    for wire in circuit.z_wires:
        if wire not in values:
            raise CircuitEvaluationError(f"output wire {wire!r} has no driver")
        lanes[wire_bit(wire)[1]] = values[wire]  # type: ignore[index]
    return [lanes.get(i, 0) for i in range(max(lanes, default=-1) + 1)]


def eval_circuit(circuit: Circuit) -> int:
    """Integer on the z bus for the circuit's initial values."""
    values = evaluate_wires(circuit, circuit.initial)
    return sum(bit << i for i, bit in enumerate(_z_lanes(circuit, values)))


def simulate_lanes(circuit: Circuit, x_lanes: Sequence[int], y_lanes: Sequence[int]) -> list[int]:
    """Bit-parallel evaluation; bit ``j`` of ``x_lanes[i]`` is bit ``i`` of sample ``j``'s x."""
    inputs = {bit_wire("x", i): lane for i, lane in enumerate(x_lanes)}
    inputs.update({bit_wire("y", i): lane for i, lane in enumerate(y_lanes)})
    return _z_lanes(circuit, evaluate_wires(circuit, inputs))


def _sum_lanes(x_lanes: Sequence[int], y_lanes: Sequence[int]) -> list[int]:
    carry = 0
    total = []
    for x, y in zip(x_lanes, y_lanes):
        total.append(x ^ y ^ carry)
        carry = (x & y) | (carry & (x ^ y))
    total.append(carry)
    return total


def _counting_lane(bit: int, lanes: int) -> int:
    """Lane pattern whose bit ``j`` is bit ``bit`` of ``j``, over ``lanes`` (a power of two) lanes."""
    block = 1 << bit
    unit = ((1 << block) - 1) << block
    return unit * (((1 << lanes) - 1) // ((1 << (2 * block)) - 1))


def _set_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def adder_counterexamples(
    circuit: Circuit, samples: Optional[Sequence[tuple[int, int]]] = None
) -> list[tuple[int, int]]:
    """
    Inputs ``(x, y)`` for which the z bus differs from ``x + y``.

    With ``samples=None`` every input pair is checked, which is only sensible
    for narrow circuits.
    """
    width = circuit.width
    if samples is None:
        lanes = 1 << (2 * width)
        x_lanes = [_counting_lane(i, lanes) for i in range(width)]
        y_lanes = [_counting_lane(width + i, lanes) for i in range(width)]
        mask = (1 << width) - 1

        def decode(j: int) -> tuple[int, int]:
            return (j & mask, j >> width)

    else:
        x_lanes = [sum(((x >> i) & 1) << j for j, (x, _) in enumerate(samples)) for i in range(width)]
        y_lanes = [sum(((y >> i) & 1) << j for j, (_, y) in enumerate(samples)) for i in range(width)]

        def decode(j: int) -> tuple[int, int]:
            return samples[j]

    mismatch = 0
    for got, want in zip_longest(simulate_lanes(circuit, x_lanes, y_lanes), _sum_lanes(x_lanes, y_lanes), fillvalue=0):
        mismatch |= got ^ want
    return [decode(j) for j in _set_bits(mismatch)]


def apply_swaps(circuit: Circuit, pairs: Iterable[SwapPair]) -> Circuit:
    """Exchange the drivers of each wire pair."""
    mapping: dict[str, str] = {}
    for a, b in pairs:
        for wire in (a, b):
            if wire not in circuit.driver:
                raise UsageError(f"wire {wire!r} is not a gate output")
            if wire in mapping:
                raise UsageError(f"wire {wire!r} appears in more than one swap")
        if a == b:
            raise UsageError(f"cannot swap wire {a!r} with itself")
        mapping[a], mapping[b] = b, a
    gates = tuple(Gate(g.op, g.in1, g.in2, mapping.get(g.out, g.out)) for g in circuit.gates)
    return Circuit(dict(circuit.initial), gates)


# ---------------------------------------------------------------------------
# Instance generator
# ---------------------------------------------------------------------------

class GeneratedInstance(NamedTuple):
    text: str
    answer: list[str]
    pairs: tuple[SwapPair, ...]


def _internal_names(rng: random.Random) -> Iterator[str]:
    used: set[str] = set()
    first_letters = [c for c in string.ascii_lowercase if c not in "xyz"]
    while True:
        name = rng.choice(first_letters) + "".join(rng.choices(string.ascii_lowercase, k=2))
        if name not in used:
            used.add(name)
            yield name


def ripple_carry_adder(width: int, rng: random.Random) -> list[Gate]:
    """Gates of a correct ``width``-bit adder with random internal wire names, shuffled."""
    names = _internal_names(rng)
    gates: list[Gate] = []

    def add(op: GateOp, a: str, b: str, out: str) -> None:
        if rng.random() < 0.5:
            a, b = b, a
        gates.append(Gate(op, a, b, out))

    carry = ""
    for i in range(width):
        x, y = bit_wire("x", i), bit_wire("y", i)
        last = i == width - 1
        if i == 0:
            add(GateOp.XOR, x, y, bit_wire("z", 0))
            carry = bit_wire("z", 1) if last else next(names)
            add(GateOp.AND, x, y, carry)
            continue
        half, generate, propagate = next(names), next(names), next(names)
        add(GateOp.XOR, x, y, half)
        add(GateOp.AND, x, y, generate)
        add(GateOp.XOR, half, carry, bit_wire("z", i))
        add(GateOp.AND, half, carry, propagate)
        carry = bit_wire("z", width) if last else next(names)
        add(GateOp.OR, generate, propagate, carry)
    rng.shuffle(gates)
    return gates


def _is_faulty(circuit: Circuit, rng: random.Random) -> bool:
    if find_cycle_wire(circuit.gates) is not None:
        return True
    width = circuit.width
    if width <= EXHAUSTIVE_WIDTH:
        return bool(adder_counterexamples(circuit))
    samples = [(rng.getrandbits(width), rng.getrandbits(width)) for _ in range(VERIFY_SAMPLES)]
    return bool(adder_counterexamples(circuit, samples))


def gen_instance(bits: int, pairs: int, seed: int = 1) -> GeneratedInstance:
    """
    Random faulty adder: a ripple-carry adder whose gates have ``pairs``
    disjoint output swaps.

    Every swap on its own breaks the adder and the combined swaps leave the
    circuit acyclic; draws violating either are repeated.
    """
    if bits < 2:
        raise UsageError(f"generator needs at least 2 bits, got {bits}")
    rng = random.Random(seed)
    gates = ripple_carry_adder(bits, rng)
    if pairs < 0 or 2 * pairs > len(gates):
        raise UsageError(f"cannot swap {pairs} pairs among {len(gates)} gates")
    initial = {bit_wire("x", i): rng.getrandbits(1) for i in range(bits)}
    initial.update({bit_wire("y", i): rng.getrandbits(1) for i in range(bits)})
    correct = Circuit(initial, tuple(gates))

    for attempt in range(MAX_GENERATOR_TRIES):
        chosen = rng.sample(range(len(gates)), 2 * pairs)
        swaps = tuple(
            (gates[chosen[2 * i]].out, gates[chosen[2 * i + 1]].out) for i in range(pairs)
        )
        if not all(_is_faulty(apply_swaps(correct, [swap]), rng) for swap in swaps):
            continue
        faulty = apply_swaps(correct, swaps)
        if find_cycle_wire(faulty.gates) is not None:
            continue
        if pairs and not _is_faulty(faulty, rng):
            continue
        answer = sorted(wire for swap in swaps for wire in swap)
        log.info("generated %d-bit adder with %d swap(s) after %d draw(s)", bits, pairs, attempt + 1)
        return GeneratedInstance(CircuitParserEmitter().emit(faulty), answer, swaps)
    raise GeneratorError(f"no acyclic faulty swap set found in {MAX_GENERATOR_TRIES} draws")


# ---------------------------------------------------------------------------
# SAT repair
# ---------------------------------------------------------------------------

class SwapModel:
    """
    Slot-assignment repair model over one growing CNF instance.

    Slots ``2i`` and ``2i + 1`` name the gates of swapped pair ``i``. Each
    training input gets its own copy of the circuit in which a gate's output
    wire carries either the gate's own value or, when the gate sits in a slot,
    the value computed by its partner slot's gate.
    """

    def __init__(self, circuit: Circuit, pairs: int) -> None:
        gate_count = len(circuit.gates)
        if pairs < 0 or 2 * pairs > gate_count:
            raise UsageError(f"need at least {2 * pairs} gates, circuit has {gate_count}")
        width = circuit.width
        z_indices = [wire_bit(w)[1] for w in circuit.z_wires]  # type: ignore[index]
        if width < 1 or len(circuit.y_wires) != width or z_indices != list(range(width + 1)):
            raise UnsupportedShapeError(
                f"expected x/y buses of equal width W and a z bus of W+1 bits, "
                f"got x={width}, y={len(circuit.y_wires)}, z={len(z_indices)}"
            )
        self.circuit = circuit
        self.pairs = pairs
        self.instance = CnfInstance()
        self.trainings: list[tuple[int, int]] = []
        self.slots: list[FdVar] = [fd_var(self.instance, gate_count) for _ in range(2 * pairs)]
        all_different(self.instance, self.slots)
        for i in range(pairs):
            fd_less_than(self.instance, self.slots[2 * i], self.slots[2 * i + 1])
            if i + 1 < pairs:
                fd_less_than(self.instance, self.slots[2 * i], self.slots[2 * i + 2])
        self.unswapped = [
            gate_and_many(self.instance, [-slot.selectors[g] for slot in self.slots])
            for g in range(gate_count)
        ]

    def add_training(self, x: int, y: int) -> None:
        inst = self.instance
        circuit = self.circuit
        width = circuit.width
        t = inst.true_lit
        wire_lit: dict[str, int] = {}
        for i in range(width):
            wire_lit[bit_wire("x", i)] = t if (x >> i) & 1 else -t
            wire_lit[bit_wire("y", i)] = t if (y >> i) & 1 else -t
        for gate in circuit.gates:
            wire_lit[gate.out] = inst.new_var()

        def lit(wire: str) -> int:
            if wire not in wire_lit:
                raise CircuitEvaluationError(f"wire {wire!r} is neither an input nor driven by a gate")
            return wire_lit[wire]

        raw = [_GATE_ENCODERS[g.op](inst, lit(g.in1), lit(g.in2)) for g in circuit.gates]
        slot_out = [inst.new_var() for _ in self.slots]
        for i, slot in enumerate(self.slots):
            own, partner = slot_out[i], slot_out[i ^ 1]
            for g, sel in enumerate(slot.selectors):
                eff = wire_lit[circuit.gates[g].out]
                inst.add_clause([-sel, -own, raw[g]])
                inst.add_clause([-sel, own, -raw[g]])
                inst.add_clause([-sel, -eff, partner])
                inst.add_clause([-sel, eff, -partner])
        for g, keep in enumerate(self.unswapped):
            eff = wire_lit[circuit.gates[g].out]
            inst.add_clause([-keep, -eff, raw[g]])
            inst.add_clause([-keep, eff, -raw[g]])
        z = BitVec(tuple(lit(w) for w in circuit.z_wires))
        bv_add(inst, bv_const(inst, x, width), bv_const(inst, y, width), z)
        self.trainings.append((x, y))

    def solve(self) -> Optional[list[tuple[int, int]]]:
        """Gate-index pairs of a consistent slot assignment, or ``None``."""
        result = self.instance.solve().decided()
        if not result.is_sat:
            return None
        assert result.model is not None
        values = [slot.value(result.model) for slot in self.slots]
        return [(values[2 * i], values[2 * i + 1]) for i in range(self.pairs)]

    def block(self, assignment: Sequence[tuple[int, int]]) -> None:
        flat = [g for pair in assignment for g in pair]
        self.instance.add_clause([-slot.selectors[g] for slot, g in zip(self.slots, flat)])


def default_trainings(width: int, pairs: int) -> int:
    """Training count scaled from 40 inputs at 45 bits, never below ``3 * pairs``."""
    return max(3 * pairs, round(DEFAULT_TRAININGS * width / REFERENCE_WIDTH), 1)


def _repair_counterexamples(repaired: Circuit, rng: random.Random) -> list[tuple[int, int]]:
    width = repaired.width
    if find_cycle_wire(repaired.gates) is not None:
        # a cyclic wiring has no counterexample; a fresh input still tightens the model
        return [(rng.getrandbits(width), rng.getrandbits(width))]
    if width <= EXHAUSTIVE_WIDTH:
        return adder_counterexamples(repaired)
    samples = [(rng.getrandbits(width), rng.getrandbits(width)) for _ in range(VERIFY_SAMPLES)]
    return adder_counterexamples(repaired, samples)


def find_swaps_sat(
    circuit: Circuit,
    pairs: int,
    trainings: Optional[int] = None,
    seed: int = 1,
    on_encoded: Optional[EncodedHook] = None,
) -> list[str]:
    """
    Sorted names of the ``2 * pairs`` swapped output wires.

    Raises
    ------
    NoConsistentSwapError
        No slot assignment explains the trainings, or verification keeps
        failing past ``MAX_TRAININGS``.
    """
    rng = random.Random(seed)
    count = default_trainings(circuit.width, pairs) if trainings is None else trainings
    if count < 1:
        raise UsageError(f"need at least one training input, got {count}")
    model = SwapModel(circuit, pairs)
    width = circuit.width
    for _ in range(count):
        model.add_training(rng.getrandbits(width), rng.getrandbits(width))
    log.info(
        "swap model: %d gates, %d slots, %d trainings, %d vars, %d clauses",
        len(circuit.gates),
        len(model.slots),
        count,
        model.instance.num_vars,
        len(model.instance.clauses),
    )
    if on_encoded is not None:
        on_encoded(model.instance)

    while True:
        assignment = model.solve()
        if assignment is None:
            raise NoConsistentSwapError(
                f"no {pairs}-swap repair is consistent with {len(model.trainings)} trainings"
            )
        swaps = [(circuit.gates[a].out, circuit.gates[b].out) for a, b in assignment]
        failures = _repair_counterexamples(apply_swaps(circuit, swaps), rng)
        if not failures:
            answer = sorted(wire for swap in swaps for wire in swap)
            log.info("verified repair after %d trainings: %s", len(model.trainings), answer)
            return answer
        log.info("candidate %s failed on %d input(s); retrying", swaps, len(failures))
        if len(model.trainings) >= MAX_TRAININGS:
            raise NoConsistentSwapError(f"verification still failing after {MAX_TRAININGS} trainings")
        model.block(assignment)
        for x, y in failures[:COUNTEREXAMPLES_PER_ROUND]:
            model.add_training(x, y)


def swap_space_size(n: int, pairs: int) -> int:
    """Number of ways to choose ``pairs`` disjoint unordered pairs among ``n`` gates."""
    if pairs < 0 or n < 2 * pairs:
        raise UsageError(f"cannot choose {pairs} disjoint pairs from {n} gates")
    return math.factorial(n) // (2**pairs * math.factorial(pairs) * math.factorial(n - 2 * pairs))


# ---------------------------------------------------------------------------
# Structural check
# ---------------------------------------------------------------------------

# Gate roles in a ripple-carry adder:
#   F  x0 XOR y0         G  x0 AND y0 (first carry)
#   A  xi XOR yi         C  xi AND yi
#   B  A XOR carry -> zi D  A AND carry
#   E  C OR D (carry)    ?  anything else
_INTERNAL_ROLE = {GateOp.XOR: "B", GateOp.AND: "D", GateOp.OR: "E"}


def _role(gate: Gate) -> tuple[str, Optional[int]]:
    bits = [wire_bit(w) for w in gate.inputs]
    on_bus = [b is not None and b[0] in "xy" for b in bits]
    if all(on_bus):
        (p1, i1), (p2, i2) = bits  # type: ignore[misc]
        if p1 == p2 or i1 != i2 or gate.op is GateOp.OR:
            return ("?", None)
        if gate.op is GateOp.XOR:
            return ("F", 0) if i1 == 0 else ("A", i1)
        return ("G", 0) if i1 == 0 else ("C", i1)
    if any(on_bus):
        return ("?", None)
    return (_INTERNAL_ROLE[gate.op], None)


class _RippleAudit:
    """
    Role and bit-index bookkeeping for ``ripple_structural_check``.

    Every internal gate must agree on the single bit position it serves; the
    position is read off the x/y gates and carries feeding it.
    """

    def __init__(self, circuit: Circuit) -> None:
        self.circuit = circuit
        self.width = circuit.width
        self.roles = [_role(g) for g in circuit.gates]

    def source(self, wire: str) -> tuple[str, Optional[int]]:
        index = self.circuit.driver.get(wire)
        return self.roles[index] if index is not None else ("?", None)

    def driver_gate(self, wire: str) -> Gate:
        return self.circuit.gates[self.circuit.driver[wire]]

    def users(self, wire: str) -> list[str]:
        return sorted(self.roles[c][0] for c in self.circuit.consumers.get(wire, ()))

    def carry_positions(self, wire: str) -> set[int]:
        """Bit positions whose carry-out ``wire`` claims to be."""
        role, _ = self.source(wire)
        if role == "G":
            return {0}
        if role != "E":
            return set()
        claims: set[int] = set()
        for inp in self.driver_gate(wire).inputs:
            kind, index = self.source(inp)
            if kind == "C":
                claims.add(index)  # type: ignore[arg-type]
            elif kind == "D":
                claims |= {
                    i for w in self.driver_gate(inp).inputs for k, i in [self.source(w)] if k == "A"
                }
        return claims

    def cell_positions(self, gate: Gate) -> set[int]:
        claims: set[int] = set()
        for inp in gate.inputs:
            kind, index = self.source(inp)
            if kind == "A":
                claims.add(index)  # type: ignore[arg-type]
            elif kind in ("E", "G"):
                claims |= {c + 1 for c in self.carry_positions(inp)}
        bit = wire_bit(gate.out)
        if bit is not None and bit[0] == "z":
            claims.add(bit[1])
        return claims

    def fed_by_half_sum_and_carry(self, gate: Gate) -> bool:
        kinds = sorted(self.source(w)[0] for w in gate.inputs)
        return kinds in (["A", "E"], ["A", "G"])

    def consistent(self, gate: Gate, role: str) -> bool:
        bit = wire_bit(gate.out)
        z_out = bit[1] if bit is not None and bit[0] == "z" else None
        users = self.users(gate.out)
        width = self.width
        if role == "F":
            return z_out == 0
        if role == "G":
            return z_out == 1 if width == 1 else (z_out is None and users == ["B", "D"])
        if role == "A":
            return z_out is None and users == ["B", "D"]
        if role == "C":
            return z_out is None and users == ["E"]
        if role == "B":
            return (
                z_out is not None
                and 1 <= z_out < width
                and self.fed_by_half_sum_and_carry(gate)
                and self.cell_positions(gate) == {z_out}
            )
        if role == "D":
            return (
                z_out is None
                and users == ["E"]
                and self.fed_by_half_sum_and_carry(gate)
                and len(self.cell_positions(gate)) == 1
            )
        if role == "E":
            if sorted(self.source(w)[0] for w in gate.inputs) != ["C", "D"]:
                return False
            positions = self.carry_positions(gate.out)
            for inp in gate.inputs:
                if self.source(inp)[0] == "D":
                    positions |= self.cell_positions(self.driver_gate(inp))
            if len(positions) != 1:
                return False
            if z_out is not None:
                return z_out == width and positions == {width - 1}
            return users == ["B", "D"]
        return False


def ripple_structural_check(circuit: Circuit) -> list[str]:
    """
    Wires that break the ripple-carry pattern, sorted.

    A gate whose role, fan-out or bit position is inconsistent flags its
    output and its gate-driven inputs. The top z wire driven by the last
    carry OR is expected and not flagged.
    """
    audit = _RippleAudit(circuit)
    flagged: set[str] = set()
    for gate, (role, _) in zip(circuit.gates, audit.roles):
        if audit.consistent(gate, role):
            continue
        log.debug("structural check: %s gate %s looks wrong", role, gate)
        flagged.add(gate.out)
        flagged.update(w for w in gate.inputs if w in circuit.driver)
    return sorted(flagged)
