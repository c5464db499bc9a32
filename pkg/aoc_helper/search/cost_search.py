# aoc_helper/search/cost_search.py
"""
Least-cost search over implicit graphs.

States are any hashable values; ``expand`` yields ``(next_state, step_cost)``
pairs. The queue orders entries by ``(cost, insertion sequence)``, so runs are
deterministic as long as ``expand`` is.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from heapq import heappop, heappush
from typing import Callable, Generic, Hashable, Iterable, Iterator, Optional, TypeVar

from aoc_helper.utilities.errors import UsageError

log = logging.getLogger(__name__)

S = TypeVar("S", bound=Hashable)
Expand = Callable[[S], Iterable[tuple[S, int]]]


@dataclass
class CostTable(Generic[S]):
    """
    Settled states with their least cost and one predecessor on a cheapest path.

    Source states have predecessor ``None``.
    """

    costs: dict[S, int] = field(default_factory=dict)
    preds: dict[S, Optional[S]] = field(default_factory=dict)

    def __contains__(self, state: object) -> bool:
        return state in self.costs

    def __getitem__(self, state: S) -> int:
        return self.costs[state]

    def __len__(self) -> int:
        return len(self.costs)

    def __iter__(self) -> Iterator[S]:
        return iter(self.costs)

    def get(self, state: S, default: Optional[int] = None) -> Optional[int]:
        return self.costs.get(state, default)

    def path_to(self, state: S) -> list[S]:
        """Source-to-``state`` path rebuilt from predecessor links."""
        if state not in self.costs:
            raise KeyError(state)
        path = [state]
        while (prev := self.preds[path[-1]]) is not None:
            path.append(prev)
        path.reverse()
        return path


@dataclass(frozen=True)
class GoalPath(Generic[S]):
    cost: int
    path: list[S]


def _settle(
    sources: Iterable[tuple[S, int]],
    expand: Expand,
    is_goal: Optional[Callable[[S], bool]] = None,
) -> tuple[CostTable[S], Optional[S]]:
    table: CostTable[S] = CostTable()
    best: dict[S, int] = {}
    tentative_pred: dict[S, Optional[S]] = {}
    heap: list[tuple[int, int, S]] = []
    sequence = itertools.count()
    for state, cost in sources:
        if cost < 0:
            raise UsageError(f"negative initial cost {cost} for source {state!r}")
        if state not in best or cost < best[state]:
            best[state] = cost
            tentative_pred[state] = None
            heappush(heap, (cost, next(sequence), state))
    while heap:
        cost, _, state = heappop(heap)
        if state in table.costs:
            continue
        table.costs[state] = cost
        table.preds[state] = tentative_pred[state]
        if is_goal is not None and is_goal(state):
            return table, state
        for nxt, step in expand(state):
            if step < 0:
                raise UsageError(f"negative step cost {step} from {state!r} to {nxt!r}")
            if nxt in table.costs:
                continue
            new_cost = cost + step
            if nxt not in best or new_cost < best[nxt]:
                best[nxt] = new_cost
                tentative_pred[nxt] = state
                heappush(heap, (new_cost, next(sequence), nxt))
    return table, None


def dijkstra_all(sources: Iterable[tuple[S, int]], expand: Expand) -> CostTable[S]:
    """Least cost from any source to every reachable state."""
    table, _ = _settle(sources, expand)
    log.debug("dijkstra_all settled %d states", len(table))
    return table


def dijkstra_goal(
    sources: Iterable[tuple[S, int]],
    expand: Expand,
    is_goal: Callable[[S], bool],
) -> Optional[GoalPath[S]]:
    """Cheapest path to the first goal state settled, or ``None`` if none is reachable."""
    table, goal = _settle(sources, expand, is_goal)
    if goal is None:
        return None
    return GoalPath(table[goal], table.path_to(goal))
