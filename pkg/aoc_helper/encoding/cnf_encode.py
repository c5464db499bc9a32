# aoc_helper/encoding/cnf_encode.py
"""
Constraint-to-CNF compilers.

All encoders take the clause sink as their first argument, allocate their own
auxiliary variables and only mention literals they created or were given.
Gate encoders fold constants: when an input is ``true_lit`` (or its negation)
the result is an existing literal and no clauses are added.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from aoc_helper.data_model.interfaces import IClauseSink
from aoc_helper.sat.cnf_instance import CnfInstance
from aoc_helper.sat.model import Model
from aoc_helper.utilities.errors import UsageError

log = logging.getLogger(__name__)


# region Gates

def _const(sink: IClauseSink, lit: int) -> Optional[bool]:
    if not sink.is_constant(lit):
        return None
    return lit > 0


def _guarded(clause: list[int], enabled_by: Optional[int]) -> list[int]:
    return clause if enabled_by is None else [*clause, -enabled_by]


def gate_not(sink: IClauseSink, a: int) -> int:
    """Negation is free: ``-a``."""
    return -a


def gate_and(sink: IClauseSink, a: int, b: int) -> int:
    """Return ``c`` with ``c <-> a & b``."""
    ca, cb = _const(sink, a), _const(sink, b)
    if ca is False or cb is False:
        return -sink.true_lit
    if ca is True:
        return b
    if cb is True:
        return a
    c = sink.new_var()
    sink.add_clause([-c, a])
    sink.add_clause([-c, b])
    sink.add_clause([c, -a, -b])
    return c


def gate_or(sink: IClauseSink, a: int, b: int) -> int:
    """Return ``c`` with ``c <-> a | b``."""
    ca, cb = _const(sink, a), _const(sink, b)
    if ca is True or cb is True:
        return sink.true_lit
    if ca is False:
        return b
    if cb is False:
        return a
    c = sink.new_var()
    sink.add_clause([c, -a])
    sink.add_clause([c, -b])
    sink.add_clause([-c, a, b])
    return c


def gate_xor(sink: IClauseSink, a: int, b: int) -> int:
    """Return ``c`` with ``c <-> a ^ b``."""
    ca, cb = _const(sink, a), _const(sink, b)
    if ca is not None:
        return -b if ca else b
    if cb is not None:
        return -a if cb else a
    c = sink.new_var()
    sink.add_clause([-c, a, b])
    sink.add_clause([-c, -a, -b])
    sink.add_clause([c, -a, b])
    sink.add_clause([c, a, -b])
    return c


def gate_eq(sink: IClauseSink, a: int, b: int) -> int:
    """Return ``c`` with ``c <-> (a == b)``."""
    return gate_xor(sink, a, -b)


def gate_ite(sink: IClauseSink, cond: int, then: int, otherwise: int) -> int:
    """Multiplexer: ``c <-> (then if cond else otherwise)``."""
    cs = _const(sink, cond)
    if cs is not None:
        return then if cs else otherwise
    if then == otherwise:
        return then
    ct, co = _const(sink, then), _const(sink, otherwise)
    if ct is not None and co is not None:
        return cond if ct else -cond
    c = sink.new_var()
    sink.add_clause([-cond, -then, c])
    sink.add_clause([-cond, then, -c])
    sink.add_clause([cond, -otherwise, c])
    sink.add_clause([cond, otherwise, -c])
    sink.add_clause([-then, -otherwise, c])
    sink.add_clause([then, otherwise, -c])
    return c


def gate_and_many(sink: IClauseSink, lits: Sequence[int]) -> int:
    """Return ``c`` with ``c <-> AND(lits)``; the empty conjunction is true."""
    live = []
    for lit in lits:
        value = _const(sink, lit)
        if value is False:
            return -sink.true_lit
        if value is None:
            live.append(lit)
    if not live:
        return sink.true_lit
    if len(live) == 1:
        return live[0]
    c = sink.new_var()
    for lit in live:
        sink.add_clause([-c, lit])
    sink.add_clause([c, *(-lit for lit in live)])
    return c

# endregion Gates


# region Cardinality

@dataclass(frozen=True)
class CardinalityContext:
    """
    Sequential unary counter over ``inputs``.

    ``counter_vars[i][j]`` is true exactly when at least ``j + 1`` of
    ``inputs[0..i]`` are true. Rows are ragged (row ``i`` has ``min(i + 1,
    width)`` cells); the last row is the counter's output.
    """

    inputs: tuple[int, ...]
    counter_vars: tuple[tuple[int, ...], ...]
    width: int

    @property
    def top(self) -> tuple[int, ...]:
        return self.counter_vars[-1] if self.counter_vars else ()

    def at_least(self, k: int) -> int:
        """Literal that is true iff at least ``k`` inputs are true, ``1 <= k <= len(top)``."""
        if not 1 <= k <= len(self.top):
            raise UsageError(f"counter of width {len(self.top)} cannot express at_least({k})")
        return self.top[k - 1]

    def at_most(self, k: int) -> int:
        """Literal that is true iff at most ``k`` inputs are true, ``0 <= k < len(top)``."""
        if not 0 <= k < len(self.top):
            raise UsageError(f"counter of width {len(self.top)} cannot express at_most({k})")
        return -self.top[k]


def build_counter(sink: IClauseSink, lits: Sequence[int], width: int) -> CardinalityContext:
    """Encode a both-directions sequential counter saturating at ``width``."""
    if width < 1:
        raise UsageError(f"counter width must be >= 1, got {width}")
    rows: list[tuple[int, ...]] = []
    prev: tuple[int, ...] = ()
    for i, x in enumerate(lits):
        row = []
        for j in range(min(i + 1, width)):
            carry = x if j == 0 else gate_and(sink, x, prev[j - 1])
            row.append(gate_or(sink, prev[j], carry) if j < len(prev) else carry)
        prev = tuple(row)
        rows.append(prev)
    return CardinalityContext(tuple(lits), tuple(rows), width)


def at_most_k(
    sink: IClauseSink, lits: Sequence[int], k: int, enabled_by: Optional[int] = None
) -> None:
    """At most ``k`` of ``lits`` are true (only when ``enabled_by`` holds, if given)."""
    if not 0 <= k <= len(lits):
        raise UsageError(f"k={k} outside 0..{len(lits)}")
    if k == len(lits):
        return
    if k == 0:
        for lit in lits:
            sink.add_clause(_guarded([-lit], enabled_by))
        return
    ctx = build_counter(sink, lits, k + 1)
    sink.add_clause(_guarded([ctx.at_most(k)], enabled_by))


def at_least_k(
    sink: IClauseSink, lits: Sequence[int], k: int, enabled_by: Optional[int] = None
) -> None:
    """At least ``k`` of ``lits`` are true (only when ``enabled_by`` holds, if given)."""
    if not 0 <= k <= len(lits):
        raise UsageError(f"k={k} outside 0..{len(lits)}")
    if k == 0:
        return
    if k == len(lits):
        for lit in lits:
            sink.add_clause(_guarded([lit], enabled_by))
        return
    ctx = build_counter(sink, lits, k)
    sink.add_clause(_guarded([ctx.at_least(k)], enabled_by))


def at_most_one(sink: IClauseSink, lits: Sequence[int]) -> None:
    """Pairwise at-most-one."""
    for i, a in enumerate(lits):
        for b in lits[i + 1:]:
            sink.add_clause([-a, -b])


def exactly_one(sink: IClauseSink, lits: Sequence[int]) -> None:
    sink.add_clause(list(lits))
    at_most_one(sink, lits)

# endregion Cardinality


# region Finite domains

@dataclass(frozen=True)
class FdVar:
    """One-hot finite-domain variable over ``0..domain_size-1``."""

    selectors: tuple[int, ...]

    @property
    def domain_size(self) -> int:
        return len(self.selectors)

    def value(self, model: Model) -> int:
        for v, sel in enumerate(self.selectors):
            if model.value(sel):
                return v
        raise ValueError("model assigns no value to this FdVar")


def fd_var(sink: IClauseSink, n: int) -> FdVar:
    """Allocate ``n`` selectors with exactly-one clauses."""
    if n < 1:
        raise UsageError(f"domain size must be >= 1, got {n}")
    selectors = tuple(sink.new_var() for _ in range(n))
    exactly_one(sink, selectors)
    return FdVar(selectors)


def all_different(sink: IClauseSink, variables: Sequence[FdVar]) -> None:
    """
    Pairwise-distinct values.

    More variables than values yields an unsatisfiable encoding rather than an
    error.
    """
    if not variables:
        return
    size = variables[0].domain_size
    if any(v.domain_size != size for v in variables):
        raise UsageError("all_different needs a common domain size")
    for value in range(size):
        at_most_one(sink, [v.selectors[value] for v in variables])


def fd_less_than(sink: IClauseSink, a: FdVar, b: FdVar) -> None:
    """``value(a) < value(b)`` through a suffix-or ladder over ``b``."""
    size = a.domain_size
    if b.domain_size != size:
        raise UsageError("fd_less_than needs a common domain size")
    ladder = [0] * size
    ladder[size - 1] = b.selectors[size - 1]
    for v in range(size - 2, -1, -1):
        ladder[v] = gate_or(sink, b.selectors[v], ladder[v + 1])
    sink.add_clause([-a.selectors[size - 1]])
    for v in range(size - 1):
        sink.add_clause([-a.selectors[v], ladder[v + 1]])

# endregion Finite domains


# region Objective

@dataclass(frozen=True)
class MaximizeResult:
    k_max: int
    model: Model
    rounds: int


def maximize_true_count(
    instance: CnfInstance,
    lits: Sequence[int],
    upper_bound: Optional[int] = None,
) -> Optional[MaximizeResult]:
    """
    Largest number of true ``lits`` over all models, by iterative strengthening.

    Each round asks for one more true literal through an assumption on a
    shared counter, so the caller's instance stays satisfiable afterwards.
    ``upper_bound`` caps the counter width when the caller knows a bound.

    Returns
    -------
    MaximizeResult | None
        ``None`` when the instance itself is unsatisfiable.
    """
    result = instance.solve().decided()
    if not result.is_sat:
        return None
    best = result.model
    assert best is not None
    k = best.count_true(lits)
    bound = len(lits) if upper_bound is None else min(len(lits), upper_bound)
    rounds = 1
    if k < bound:
        ctx = build_counter(instance, lits, bound)
        while k < bound:
            rounds += 1
            attempt = instance.solve([ctx.at_least(k + 1)]).decided()
            if not attempt.is_sat:
                break
            best = attempt.model
            assert best is not None
            k = best.count_true(lits)
            log.debug("strengthened to %d true literals", k)
    log.info("maximize_true_count: k_max=%d after %d solve(s)", k, rounds)
    return MaximizeResult(k, best, rounds)

# endregion Objective
