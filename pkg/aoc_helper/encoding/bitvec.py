# aoc_helper/encoding/bitvec.py
"""
Unsigned bit-vectors compiled to CNF.

Bits are literals, least significant first. Constant bits are ``true_lit`` or
its negation, so arithmetic on constants folds away through the gate encoders.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from aoc_helper.data_model.interfaces import IClauseSink
from aoc_helper.sat.cnf_instance import CnfInstance
from aoc_helper.sat.model import Model
from aoc_helper.utilities.errors import UsageError

from .cnf_encode import gate_and, gate_ite, gate_or, gate_xor

log = logging.getLogger(__name__)

MAX_SHIFT_BITS = 6


@dataclass(frozen=True)
class BitVec:
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.bits:
            raise UsageError("a bit-vector needs width >= 1")

    @property
    def width(self) -> int:
        return len(self.bits)

    def value(self, model: Model) -> int:
        return sum(1 << i for i, bit in enumerate(self.bits) if model.value(bit))


# region Construction and slicing

def bv_new(sink: IClauseSink, width: int) -> BitVec:
    if width < 1:
        raise UsageError(f"width must be >= 1, got {width}")
    return BitVec(tuple(sink.new_var() for _ in range(width)))


def bv_const(sink: IClauseSink, value: int, width: int) -> BitVec:
    if width < 1:
        raise UsageError(f"width must be >= 1, got {width}")
    if not 0 <= value < (1 << width):
        raise UsageError(f"{value} does not fit in {width} unsigned bits")
    t = sink.true_lit
    return BitVec(tuple(t if (value >> i) & 1 else -t for i in range(width)))


def bv_take(bv: BitVec, k: int) -> BitVec:
    """Low ``k`` bits (value mod 2**k); shares literals."""
    if not 0 < k <= bv.width:
        raise UsageError(f"take {k} outside 1..{bv.width}")
    return BitVec(bv.bits[:k])


def bv_drop(bv: BitVec, k: int) -> BitVec:
    """High ``width - k`` bits (value div 2**k); shares literals."""
    if not 0 <= k < bv.width:
        raise UsageError(f"drop {k} outside 0..{bv.width - 1}")
    return BitVec(bv.bits[k:])


def bv_zext(sink: IClauseSink, bv: BitVec, width: int) -> BitVec:
    """Zero-extend to ``width`` (no-op when already that wide)."""
    if width < bv.width:
        raise UsageError(f"cannot zero-extend width {bv.width} down to {width}")
    if width == bv.width:
        return bv
    return BitVec(bv.bits + (-sink.true_lit,) * (width - bv.width))


def bv_value(model: Model, bv: BitVec) -> int:
    return bv.value(model)

# endregion Construction and slicing


# region Word operations

def bv_xor(sink: IClauseSink, x: BitVec, y: Union[BitVec, int]) -> BitVec:
    """Bitwise xor with a vector of equal width or a constant."""
    if isinstance(y, int):
        y = bv_const(sink, y, x.width)
    elif y.width != x.width:
        raise UsageError(f"xor width mismatch: {x.width} vs {y.width}")
    return BitVec(tuple(gate_xor(sink, a, b) for a, b in zip(x.bits, y.bits)))


def bv_shr_var(sink: IClauseSink, x: BitVec, sh: BitVec) -> BitVec:
    """Barrel shifter: ``x >> value(sh)``, one multiplexer stage per bit of ``sh``."""
    if sh.width > MAX_SHIFT_BITS:
        raise UsageError(f"shift amount wider than {MAX_SHIFT_BITS} bits")
    zero = -sink.true_lit
    stage = list(x.bits)
    width = x.width
    for s, select in enumerate(sh.bits):
        amount = 1 << s
        stage = [
            gate_ite(sink, select, stage[i + amount] if i + amount < width else zero, stage[i])
            for i in range(width)
        ]
    return BitVec(tuple(stage))


def bv_eq_const(sink: IClauseSink, x: BitVec, n: int) -> None:
    if not 0 <= n < (1 << x.width):
        raise UsageError(f"{n} does not fit in {x.width} unsigned bits")
    for i, bit in enumerate(x.bits):
        sink.add_clause([bit if (n >> i) & 1 else -bit])


def bv_eq(sink: IClauseSink, x: BitVec, y: BitVec) -> None:
    if x.width != y.width:
        raise UsageError(f"eq width mismatch: {x.width} vs {y.width}")
    for a, b in zip(x.bits, y.bits):
        if a != b:
            sink.add_clause([-a, b])
            sink.add_clause([a, -b])


def bv_add(sink: IClauseSink, x: BitVec, y: BitVec, z: BitVec) -> None:
    """Ripple-carry ``z = x + y`` with ``z`` one bit wider than the operands."""
    if x.width != y.width or z.width != x.width + 1:
        raise UsageError(
            f"bv_add needs |x| = |y| = w and |z| = w + 1, got {x.width}, {y.width}, {z.width}"
        )
    carry = -sink.true_lit
    total = []
    for a, b in zip(x.bits, y.bits):
        half = gate_xor(sink, a, b)
        total.append(gate_xor(sink, half, carry))
        carry = gate_or(sink, gate_and(sink, a, b), gate_and(sink, half, carry))
    total.append(carry)
    bv_eq(sink, z, BitVec(tuple(total)))

# endregion Word operations


# region Minimization

@dataclass(frozen=True)
class BitDecision:
    """How one bit of a minimum was settled: by the current model, a SAT call, or an UNSAT call."""

    index: int
    value: int
    decided_by: str


@dataclass(frozen=True)
class MinimizeResult:
    value: int
    model: Model
    transcript: tuple[BitDecision, ...]


def bv_minimize(
    instance: CnfInstance, x: BitVec, assumptions: Sequence[int] = ()
) -> Optional[MinimizeResult]:
    """
    Numeric minimum of ``x`` over all models, fixing bits MSB first.

    A bit is kept 0 when the instance stays satisfiable with it cleared,
    otherwise it is fixed to 1. When the latest model already has the bit
    cleared no solve is needed. Returns ``None`` if the instance is UNSAT under
    ``assumptions``.
    """
    result = instance.solve(assumptions).decided()
    if not result.is_sat:
        return None
    model = result.model
    assert model is not None
    fixed = list(assumptions)
    transcript = []
    for index in range(x.width - 1, -1, -1):
        bit = x.bits[index]
        if not model.value(bit):
            fixed.append(-bit)
            transcript.append(BitDecision(index, 0, "model"))
            continue
        trial = instance.solve([*fixed, -bit]).decided()
        if trial.is_sat:
            model = trial.model
            assert model is not None
            fixed.append(-bit)
            transcript.append(BitDecision(index, 0, "solve"))
        else:
            fixed.append(bit)
            transcript.append(BitDecision(index, 1, "unsat"))
    value = x.value(model)
    log.info("bv_minimize: width %d -> %d", x.width, value)
    return MinimizeResult(value, model, tuple(transcript))

# endregion Minimization
