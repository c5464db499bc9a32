# aoc_helper/search/memo_table.py
"""
Memoized minimum over derivation trees.

A key is solved by trying each of its derivations: the derivation's own
objective delta plus the solved objectives of its subkeys. The smallest total
wins, with the first derivation kept on ties. Subkey recursion must be well
founded; re-entering a key that is still being solved raises
``RecursionCycleError``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Generic, Hashable, Iterable, Optional, TypeVar

from aoc_helper.utilities.errors import RecursionCycleError

log = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)


@dataclass(frozen=True, order=True)
class LexObjective:
    """Pair compared lexicographically: ``primary`` first, then ``secondary``."""

    primary: int = 0
    secondary: int = 0

    def __add__(self, other: "LexObjective") -> "LexObjective":
        return LexObjective(self.primary + other.primary, self.secondary + other.secondary)


ZERO = LexObjective()


@dataclass(frozen=True)
class Derivation(Generic[K]):
    """
    One way to solve a key.

    The witness of the derivation is ``emit`` followed by the witnesses of
    ``subkeys`` in order.
    """

    delta: LexObjective
    subkeys: tuple[K, ...] = ()
    emit: tuple[Any, ...] = ()


Solution = tuple[LexObjective, tuple[Any, ...]]


class MemoTable(Generic[K]):
    """Cache of per-key minimum objectives with one witness each."""

    def __init__(self, derive: Callable[[K], Iterable[Derivation[K]]]) -> None:
        self._derive = derive
        self._cache: dict[K, Optional[Solution]] = {}
        self._active: set[K] = set()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._cache)

    def clear(self) -> None:
        self._cache.clear()
        self.hits = 0
        self.misses = 0

    def solve(self, key: K) -> Optional[Solution]:
        """Minimum objective and witness for ``key``; ``None`` when nothing derives it."""
        if key in self._cache:
            self.hits += 1
            return self._cache[key]
        if key in self._active:
            raise RecursionCycleError(f"key {key!r} depends on itself")
        self.misses += 1
        self._active.add(key)
        best: Optional[Solution] = None
        try:
            for derivation in self._derive(key):
                total = derivation.delta
                witness = derivation.emit
                for sub in derivation.subkeys:
                    solved = self.solve(sub)
                    if solved is None:
                        break
                    total = total + solved[0]
                    witness = witness + solved[1]
                else:
                    if best is None or total < best[0]:
                        best = (total, witness)
        finally:
            self._active.discard(key)
        self._cache[key] = best
        return best


def memo_min(
    key: K,
    derive: Callable[[K], Iterable[Derivation[K]]],
    table: Optional[MemoTable[K]] = None,
) -> Optional[Solution]:
    """Solve ``key`` with a fresh table, or with ``table`` to share its cache."""
    return (table if table is not None else MemoTable(derive)).solve(key)
