# aoc_helper/controllers/ccrev.py
"""
Three-register computer: interpreter and reverse engineering of the smallest
register A that makes the program print a target sequence.

Both reverse solvers assume a single loop: the program ends with ``jnz 0``,
contains no other jump, prints exactly once per pass and shifts A right by 3
exactly once per pass.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from aoc_helper.data_model.parsers_emitters import DeviceParserEmitter
from aoc_helper.data_model.puzzle_types import Device, Machine
from aoc_helper.encoding import (
    BitVec,
    bv_const,
    bv_drop,
    bv_eq_const,
    bv_minimize,
    bv_new,
    bv_shr_var,
    bv_take,
    bv_xor,
    bv_zext,
    gate_and,
    gate_or,
)
from aoc_helper.encoding.bitvec import MAX_SHIFT_BITS
from aoc_helper.sat import CnfInstance
from aoc_helper.utilities.core_util import read_puzzle_text
from aoc_helper.utilities.errors import ExecutionError, UnsupportedShapeError, UsageError

log = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 10**6
WIDE_REGISTER_BITS = 56

ADV, BXL, BST, JNZ, BXC, OUT, BDV, CDV = range(8)
_COMBO_OPS = frozenset((ADV, BST, OUT, BDV, CDV))
_COMBO_REGISTERS = {4: "a", 5: "b", 6: "c"}

EncodedHook = Callable[[CnfInstance], None]


def parse_device(text: str) -> Device:
    return DeviceParserEmitter().parse(text)


def load_device(path: Union[str, Path]) -> Device:
    return parse_device(read_puzzle_text(path))


# region Interpreter

def _combo(machine: Machine, operand: int) -> int:
    if operand <= 3:
        return operand
    if operand == 4:
        return machine.a
    if operand == 5:
        return machine.b
    if operand == 6:
        return machine.c
    raise ExecutionError(f"combo operand 7 at ip={machine.ip}")


def step(machine: Machine) -> None:
    """Execute one instruction."""
    if machine.ip + 1 >= len(machine.program):
        raise ExecutionError(f"opcode at ip={machine.ip} has no operand")
    opcode, operand = machine.program[machine.ip], machine.program[machine.ip + 1]
    jumped = False
    if opcode == ADV:
        machine.a >>= _combo(machine, operand)
    elif opcode == BXL:
        machine.b ^= operand
    elif opcode == BST:
        machine.b = _combo(machine, operand) & 7
    elif opcode == JNZ:
        if machine.a != 0:
            if operand % 2:
                raise ExecutionError(f"jump to odd address {operand}")
            machine.ip = operand
            jumped = True
    elif opcode == BXC:
        machine.b ^= machine.c
    elif opcode == OUT:
        machine.output.append(_combo(machine, operand) & 7)
    elif opcode == BDV:
        machine.b = machine.a >> _combo(machine, operand)
    else:
        machine.c = machine.a >> _combo(machine, operand)
    if not jumped:
        machine.ip += 2
    machine.steps += 1


def run(
    program: Sequence[int],
    a: int,
    b: int = 0,
    c: int = 0,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> list[int]:
    """Run to halt and return the printed codes."""
    if min(a, b, c) < 0:
        raise UsageError("registers must be nonnegative")
    machine = Machine(tuple(program), a, b, c)
    while not machine.halted:
        if machine.steps >= step_budget:
            raise ExecutionError(f"no halt within {step_budget} steps")
        step(machine)
    return machine.output

# endregion Interpreter


# region Loop shape

@dataclass(frozen=True)
class LoopBody:
    """Instructions of one pass, without the trailing ``jnz 0``."""

    instructions: tuple[tuple[int, int], ...]

    def carried_registers(self) -> frozenset[str]:
        """B and C when a pass reads them before writing them."""
        written = {"a"}
        carried: set[str] = set()
        for op, operand in self.instructions:
            reads: set[str] = set()
            if op in _COMBO_OPS and operand in _COMBO_REGISTERS:
                reads.add(_COMBO_REGISTERS[operand])
            if op == BXL:
                reads.add("b")
            elif op == BXC:
                reads.update(("b", "c"))
            carried |= reads - written
            if op in (BXL, BST, BXC, BDV):
                written.add("b")
            elif op == CDV:
                written.add("c")
        return frozenset(carried)


def analyze_loop(program: Sequence[int]) -> LoopBody:
    if len(program) < 2 or len(program) % 2:
        raise UnsupportedShapeError("program must be a nonempty list of opcode/operand pairs")
    pairs = [(program[i], program[i + 1]) for i in range(0, len(program), 2)]
    jumps = [i for i, (op, _) in enumerate(pairs) if op == JNZ]
    if jumps != [len(pairs) - 1] or pairs[-1][1] != 0:
        raise UnsupportedShapeError("expected exactly one jump, a trailing 'jnz 0'")
    body = pairs[:-1]
    if sum(1 for op, _ in body if op == OUT) != 1:
        raise UnsupportedShapeError("expected exactly one 'out' per pass")
    if [operand for op, operand in body if op == ADV] != [3]:
        raise UnsupportedShapeError("expected exactly one 'adv 3' per pass")
    if any(op in _COMBO_OPS and operand == 7 for op, operand in body):
        raise UnsupportedShapeError("combo operand 7 is invalid")
    return LoopBody(tuple(body))


def _target_of(program: Sequence[int], target: Optional[Sequence[int]]) -> tuple[int, ...]:
    codes = tuple(program if target is None else target)
    if not codes:
        raise UsageError("target output must not be empty")
    if any(not 0 <= code <= 7 for code in codes):
        raise UsageError(f"target codes must be in 0..7, got {list(codes)}")
    return codes

# endregion Loop shape


# region Reverse solvers

def reverse_min_a_dfs(
    program: Sequence[int], target: Optional[Sequence[int]] = None
) -> Optional[int]:
    """
    Smallest A printing ``target`` (default: the program itself), building A
    one octal digit at a time from the most significant end.

    A prefix is kept when running it prints the matching suffix of ``target``;
    this relies on each pass depending only on A, so programs that carry B or
    C from one pass to the next are rejected.
    """
    carried = analyze_loop(program).carried_registers()
    if carried:
        raise UnsupportedShapeError(
            f"digit search needs every pass to set {sorted(carried)} before reading it"
        )
    codes = _target_of(program, target)

    def search(level: int, prefix: int) -> Optional[int]:
        for digit in range(8):
            candidate = (prefix << 3) | digit
            if run(program, candidate) != list(codes[level:]):
                continue
            if level == 0:
                return candidate
            found = search(level - 1, candidate)
            if found is not None:
                return found
        return None

    answer = search(len(codes) - 1, 0)
    if answer is not None and run(program, answer) != list(codes):
        raise ExecutionError(f"candidate {answer} failed verification")
    log.info("dfs reverse search -> %s", answer)
    return answer


class _Unroller:
    """Symbolic execution of one pass over bit-vector registers."""

    def __init__(self, instance: CnfInstance) -> None:
        self.instance = instance
        self.zero = bv_const(instance, 0, 1)

    def combo(self, regs: dict[str, BitVec], operand: int) -> BitVec:
        if operand <= 3:
            return bv_const(self.instance, operand, 3)
        return regs["abc"[operand - 4]]

    def widen(self, bv: BitVec, width: int) -> BitVec:
        return bv_zext(self.instance, bv, max(width, bv.width))

    def low3(self, bv: BitVec) -> BitVec:
        return bv_take(self.widen(bv, 3), 3)

    def shift_right(self, x: BitVec, amount: BitVec, constant: Optional[int]) -> BitVec:
        if constant is not None:
            return x if constant == 0 else (bv_drop(x, constant) if constant < x.width else self.zero)
        if amount.width <= MAX_SHIFT_BITS:
            return bv_shr_var(self.instance, x, amount)
        shifted = bv_shr_var(self.instance, x, bv_take(amount, MAX_SHIFT_BITS))
        overflow = amount.bits[MAX_SHIFT_BITS]
        for bit in amount.bits[MAX_SHIFT_BITS + 1:]:
            overflow = gate_or(self.instance, overflow, bit)
        return BitVec(tuple(gate_and(self.instance, bit, -overflow) for bit in shifted.bits))

    def run_pass(self, body: LoopBody, regs: dict[str, BitVec]) -> BitVec:
        emitted = None
        for opcode, operand in body.instructions:
            constant = operand if operand <= 3 else None
            if opcode == ADV:
                regs["a"] = self.shift_right(regs["a"], self.combo(regs, operand), constant)
            elif opcode == BXL:
                regs["b"] = bv_xor(self.instance, self.widen(regs["b"], 3), operand)
            elif opcode == BST:
                regs["b"] = self.low3(self.combo(regs, operand))
            elif opcode == BXC:
                width = max(regs["b"].width, regs["c"].width)
                regs["b"] = bv_xor(self.instance, self.widen(regs["b"], width), self.widen(regs["c"], width))
            elif opcode == OUT:
                emitted = self.low3(self.combo(regs, operand))
            elif opcode == BDV:
                regs["b"] = self.shift_right(regs["a"], self.combo(regs, operand), constant)
            elif opcode == CDV:
                regs["c"] = self.shift_right(regs["a"], self.combo(regs, operand), constant)
        assert emitted is not None
        return emitted


def reverse_min_a_sat(
    program: Sequence[int],
    target: Optional[Sequence[int]] = None,
    width: Optional[int] = None,
    on_encoded: Optional[EncodedHook] = None,
) -> Optional[int]:
    """
    Smallest A printing ``target`` via a bit-vector unrolling and MSB-first
    minimization.

    A has ``3 * len(target)`` bits unless ``width`` overrides it. Every pass but
    the last must leave A nonzero and the last must leave it zero, so the loop
    runs exactly once per printed code.
    """
    body = analyze_loop(program)
    codes = _target_of(program, target)
    width = width or 3 * len(codes)
    if width < 3:
        raise UsageError(f"A needs at least 3 bits, got {width}")
    instance = CnfInstance()
    unroller = _Unroller(instance)
    a_start = bv_new(instance, width)
    regs = {"a": a_start, "b": unroller.zero, "c": unroller.zero}
    for index, code in enumerate(codes):
        emitted = unroller.run_pass(body, regs)
        bv_eq_const(instance, emitted, code)
        if index < len(codes) - 1:
            instance.add_clause(regs["a"].bits)
        else:
            bv_eq_const(instance, regs["a"], 0)
    log.info(
        "unrolled %d passes: %d vars, %d clauses", len(codes), instance.num_vars, len(instance.clauses)
    )
    if on_encoded is not None:
        on_encoded(instance)
    result = bv_minimize(instance, a_start)
    if result is None:
        return None
    if run(program, result.value) != list(codes):
        raise ExecutionError(f"SAT answer {result.value} failed verification")
    return result.value

# endregion Reverse solvers
