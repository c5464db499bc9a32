# aoc_helper/sat/cdcl_solver.py
"""
Conflict-driven clause learning engine.

The solver is incremental: it is attached to one ``CnfInstance`` and pulls any
variables and clauses added since the previous call before each solve. Learned
clauses are kept across calls, which is what makes repeated solving under
assumptions (objective strengthening, MSB-first minimization, counterexample
retries) cheap.

Representation
--------------
Literals are signed ints. Per-literal arrays (``_val``, ``_watches``) have
``2 * n + 1`` slots and are indexed directly by the literal, so ``-v`` lands in
the upper half via Python's negative indexing. They are rebuilt whenever the
variable count grows, which only happens between solves at decision level 0.
"""

from __future__ import annotations

import copy
import logging
from heapq import heapify, heappop, heappush
from typing import TYPE_CHECKING, Optional, Sequence

from aoc_helper.data_model.interfaces import SatStatus

from .model import Model, SolveResult
from .solver_config import SolverConfig, SolverStats

if TYPE_CHECKING:
    from .cnf_instance import CnfInstance

log = logging.getLogger(__name__)

_RESCALE_LIMIT = 1e100


class CdclSolver:
    """
    Two-watched-literal CDCL with first-UIP learning and non-chronological
    backjumping.

    Branching picks the unassigned variable of highest activity, lowest index
    on ties, with the saved phase (initially negative).
    """

    def __init__(self, config: Optional[SolverConfig] = None) -> None:
        self.config = config or SolverConfig()
        self.stats = SolverStats()
        self._n = 0
        self._val: list[int] = [0]
        self._watches: list[list[list[int]]] = [[]]
        self._level: list[int] = [0]
        self._reason: list[Optional[list[int]]] = [None]
        self._activity: list[float] = [0.0]
        self._phase: list[bool] = [False]
        self._seen: list[bool] = [False]
        self._heap: list[tuple[float, int]] = []
        self._var_inc = 1.0
        self._trail: list[int] = []
        self._trail_lim: list[int] = []
        self._qhead = 0
        self._loaded = 0
        self._original_count = 0
        self._learned: list[list[int]] = []
        self._lbd: dict[int, int] = {}
        self._root_unsat = False

    # region Public API

    @property
    def learned(self) -> list[list[int]]:
        return self._learned

    def solve(self, instance: "CnfInstance", assumptions: Sequence[int] = ()) -> SolveResult:
        """Solve ``instance`` under ``assumptions``; see ``CnfInstance.solve``."""
        self.stats.solves += 1
        if not self._root_unsat:
            self._cancel_until(0)
            self._sync(instance)
        if self._root_unsat or self._propagate() is not None:
            self._root_unsat = True
            return self._result(SatStatus.UNSAT)
        status = self._search(list(assumptions))
        log.debug("solve #%d -> %s (%s)", self.stats.solves, status.value, self.stats.summary())
        if status is SatStatus.SAT:
            model = Model(tuple(self._val[v] == 1 for v in range(self._n + 1)))
            return self._result(status, model)
        return self._result(status)

    # endregion Public API

    # region Loading

    def _grow(self, n: int) -> None:
        old_n, old_val, old_watches = self._n, self._val, self._watches
        self._val = [0] * (2 * n + 1)
        self._watches = [[] for _ in range(2 * n + 1)]
        for v in range(1, old_n + 1):
            self._val[v] = old_val[v]
            self._val[-v] = old_val[-v]
            self._watches[v] = old_watches[v]
            self._watches[-v] = old_watches[-v]
        extra = n - old_n
        self._level.extend([0] * extra)
        self._reason.extend([None] * extra)
        self._activity.extend([0.0] * extra)
        self._phase.extend([False] * extra)
        self._seen.extend([False] * extra)
        for v in range(old_n + 1, n + 1):
            heappush(self._heap, (-0.0, v))
        self._n = n

    def _sync(self, instance: "CnfInstance") -> None:
        if instance.num_vars > self._n:
            self._grow(instance.num_vars)
        pending = instance.clauses[self._loaded:]
        self._loaded = len(instance.clauses)
        val = self._val
        for clause in pending:
            self._original_count += 1
            if any(val[lit] == 1 for lit in clause):
                continue
            lits = [lit for lit in clause if val[lit] == 0]
            if not lits:
                self._root_unsat = True
                return
            if len(lits) == 1:
                self._enqueue(lits[0], None)
            else:
                self._watches[lits[0]].append(lits)
                self._watches[lits[1]].append(lits)

    # endregion Loading

    # region Core loop

    def _enqueue(self, lit: int, reason: Optional[list[int]]) -> None:
        v = lit if lit > 0 else -lit
        self._val[lit] = 1
        self._val[-lit] = -1
        self._level[v] = len(self._trail_lim)
        self._reason[v] = reason
        self._trail.append(lit)

    def _propagate(self) -> Optional[list[int]]:
        val = self._val
        watches = self._watches
        trail = self._trail
        level = self._level
        reason = self._reason
        current = len(self._trail_lim)
        start = self._qhead
        while self._qhead < len(trail):
            false_lit = -trail[self._qhead]
            self._qhead += 1
            ws = watches[false_lit]
            kept: list[list[int]] = []
            conflict = None
            i, n = 0, len(ws)
            while i < n:
                c = ws[i]
                i += 1
                if c[0] == false_lit:
                    c[0] = c[1]
                    c[1] = false_lit
                first = c[0]
                if val[first] == 1:
                    kept.append(c)
                    continue
                for k in range(2, len(c)):
                    other = c[k]
                    if val[other] != -1:
                        c[1] = other
                        c[k] = false_lit
                        watches[other].append(c)
                        break
                else:
                    kept.append(c)
                    if val[first] == -1:
                        kept.extend(ws[i:])
                        conflict = c
                        break
                    v = first if first > 0 else -first
                    val[first] = 1
                    val[-first] = -1
                    level[v] = current
                    reason[v] = c
                    trail.append(first)
            watches[false_lit] = kept
            if conflict is not None:
                self.stats.propagations += self._qhead - start
                self._qhead = len(trail)
                return conflict
        self.stats.propagations += self._qhead - start
        return None

    def _analyze(self, conflict: list[int]) -> tuple[list[int], int, int]:
        seen = self._seen
        level = self._level
        trail = self._trail
        current = len(self._trail_lim)
        learnt = [0]
        pending = 0
        p = 0
        index = len(trail) - 1
        clause = conflict
        while True:
            for j in range(0 if p == 0 else 1, len(clause)):
                q = clause[j]
                v = q if q > 0 else -q
                if not seen[v] and level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if level[v] >= current:
                        pending += 1
                    else:
                        learnt.append(q)
            while not seen[abs(trail[index])]:
                index -= 1
            p = trail[index]
            index -= 1
            v = abs(p)
            clause = self._reason[v]  # type: ignore[assignment]
            seen[v] = False
            pending -= 1
            if pending == 0:
                break
        learnt[0] = -p
        for q in learnt[1:]:
            seen[abs(q)] = False
        if len(learnt) == 1:
            back_level = 0
        else:
            top = max(range(1, len(learnt)), key=lambda j: level[abs(learnt[j])])
            learnt[1], learnt[top] = learnt[top], learnt[1]
            back_level = level[abs(learnt[1])]
        lbd = len({level[abs(q)] for q in learnt})
        return learnt, back_level, lbd

    def _bump(self, v: int) -> None:
        act = self._activity
        act[v] += self._var_inc
        if act[v] > _RESCALE_LIMIT:
            for u in range(1, self._n + 1):
                act[u] *= 1.0 / _RESCALE_LIMIT
            self._var_inc *= 1.0 / _RESCALE_LIMIT
            self._rebuild_heap()
        else:
            heappush(self._heap, (-act[v], v))

    def _rebuild_heap(self) -> None:
        val = self._val
        self._heap = [(-self._activity[v], v) for v in range(1, self._n + 1) if val[v] == 0]
        heapify(self._heap)

    def _pick_branch_var(self) -> int:
        heap = self._heap
        act = self._activity
        val = self._val
        if len(heap) > 4 * self._n + 64:
            self._rebuild_heap()
            heap = self._heap
        while heap:
            neg_act, v = heappop(heap)
            if val[v] == 0 and -neg_act == act[v]:
                return v
        return 0

    def _cancel_until(self, target: int) -> None:
        if len(self._trail_lim) <= target:
            return
        val = self._val
        reason = self._reason
        phase = self._phase
        act = self._activity
        heap = self._heap
        save = self.config.phase_saving
        stop = self._trail_lim[target]
        for i in range(len(self._trail) - 1, stop - 1, -1):
            lit = self._trail[i]
            v = lit if lit > 0 else -lit
            val[lit] = 0
            val[-lit] = 0
            reason[v] = None
            if save:
                phase[v] = lit > 0
            heappush(heap, (-act[v], v))
        del self._trail[stop:]
        del self._trail_lim[target:]
        self._qhead = len(self._trail)

    def _search(self, assumptions: list[int]) -> SatStatus:
        cfg = self.config
        restart_limit = float(cfg.restart_first)
        since_restart = 0
        budget = cfg.conflict_budget
        conflicts_here = 0
        while True:
            conflict = self._propagate()
            if conflict is not None:
                self.stats.conflicts += 1
                since_restart += 1
                conflicts_here += 1
                if not self._trail_lim:
                    self._root_unsat = True
                    return SatStatus.UNSAT
                learnt, back_level, lbd = self._analyze(conflict)
                self._cancel_until(back_level)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], None)
                else:
                    self._learned.append(learnt)
                    self._lbd[id(learnt)] = lbd
                    self.stats.learned += 1
                    self._watches[learnt[0]].append(learnt)
                    self._watches[learnt[1]].append(learnt)
                    self._enqueue(learnt[0], learnt)
                self._var_inc /= cfg.var_decay
                if budget is not None and conflicts_here >= budget:
                    self._cancel_until(0)
                    return SatStatus.UNKNOWN
                continue

            if since_restart >= restart_limit:
                self.stats.restarts += 1
                since_restart = 0
                restart_limit *= cfg.restart_factor
                self._cancel_until(0)
                self._maybe_reduce()
                continue

            depth = len(self._trail_lim)
            if depth < len(assumptions):
                p = assumptions[depth]
                if self._val[p] == 1:
                    self._trail_lim.append(len(self._trail))
                    continue
                if self._val[p] == -1:
                    return SatStatus.UNSAT
                self._trail_lim.append(len(self._trail))
                self._enqueue(p, None)
                continue

            v = self._pick_branch_var()
            if v == 0:
                return SatStatus.SAT
            self.stats.decisions += 1
            self._trail_lim.append(len(self._trail))
            self._enqueue(v if self._phase[v] else -v, None)

    # endregion Core loop

    # region Learned clause housekeeping

    def _maybe_reduce(self) -> None:
        limit = self.config.learned_ratio * max(1, self._original_count)
        if len(self._learned) <= limit:
            return
        reason = self._reason
        keep_lbd = self.config.glue_keep

        def locked(c: list[int]) -> bool:
            return reason[abs(c[0])] is c and self._val[c[0]] == 1

        candidates = [
            c for c in self._learned if self._lbd[id(c)] > keep_lbd and not locked(c)
        ]
        candidates.sort(key=lambda c: -self._lbd[id(c)])
        doomed = {id(c) for c in candidates[: len(candidates) // 2]}
        if not doomed:
            return
        self._learned = [c for c in self._learned if id(c) not in doomed]
        for cid in doomed:
            del self._lbd[cid]
        for lit_index in range(len(self._watches)):
            ws = self._watches[lit_index]
            if ws:
                self._watches[lit_index] = [c for c in ws if id(c) not in doomed]
        self.stats.reductions += 1
        log.debug("reduced learned store by %d to %d clauses", len(doomed), len(self._learned))

    # endregion Learned clause housekeeping

    def _result(self, status: SatStatus, model: Optional[Model] = None) -> SolveResult:
        return SolveResult(status=status, model=model, stats=copy.copy(self.stats))
