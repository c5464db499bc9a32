# aoc_helper/controllers/clique.py
"""
LAN party network: triangles with a 't' computer, and the maximum clique by
SAT (non-edge clauses plus a maximized true count) or by Bron-Kerbosch.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Callable, Iterable, Optional, Union

from aoc_helper.data_model.parsers_emitters import NetworkParserEmitter
from aoc_helper.data_model.puzzle_types import Network
from aoc_helper.encoding import maximize_true_count
from aoc_helper.sat import CnfInstance
from aoc_helper.utilities.core_util import read_puzzle_text
from aoc_helper.utilities.errors import UsageError

log = logging.getLogger(__name__)

EncodedHook = Callable[[CnfInstance], None]


def parse_network(text: str) -> Network:
    return NetworkParserEmitter().parse(text)


def load_network(path: Union[str, Path]) -> Network:
    return parse_network(read_puzzle_text(path))


def count_t_triangles(net: Network) -> int:
    """Triangles with at least one vertex whose name starts with 't'."""
    names = net.vertices
    count = 0
    for i, neighbors in enumerate(net.adjacency):
        for j in neighbors:
            if j <= i:
                continue
            for k in neighbors & net.adjacency[j]:
                if k > j and any(names[v].startswith("t") for v in (i, j, k)):
                    count += 1
    return count


def max_clique_sat(net: Network, on_encoded: Optional[EncodedHook] = None) -> list[str]:
    """
    Maximum clique via SAT.

    One variable per vertex, a clause ``(-b_i | -b_j)`` per non-adjacent pair,
    then the number of true vertex variables is maximized. The counter is capped
    at ``max_degree + 1``, which bounds any clique.
    """
    n = len(net.vertices)
    if n == 0:
        raise UsageError("network has no vertices")
    instance = CnfInstance()
    chosen = instance.new_vars(n)
    instance.add_clauses(
        [-chosen[i], -chosen[j]] for i in range(n) for j in range(i + 1, n) if not net.has_edge(i, j)
    )
    log.info("clique model: %d vertices, %d non-edge clauses", n, len(instance.clauses))
    if on_encoded is not None:
        on_encoded(instance)
    result = maximize_true_count(instance, chosen, upper_bound=net.max_degree() + 1)
    if result is None:
        raise AssertionError("vertex selection model cannot be unsatisfiable")
    members = [i for i in range(n) if result.model.value(chosen[i])]
    assert net.is_clique(members), "solver returned a non-clique"
    return [net.vertices[i] for i in members]


def bron_kerbosch(net: Network) -> list[str]:
    """Maximum clique by Bron-Kerbosch with pivoting; vertices tried in index order."""
    best: list[int] = []
    adjacency = net.adjacency

    def expand(r: list[int], p: set[int], x: set[int]) -> None:
        nonlocal best
        if not p and not x:
            if len(r) > len(best):
                best = list(r)
            return
        if len(r) + len(p) <= len(best):
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & adjacency[u]))
        for v in sorted(p - adjacency[pivot]):
            expand(r + [v], p & adjacency[v], x & adjacency[v])
            p = p - {v}
            x = x | {v}

    expand([], set(range(len(net.vertices))), set())
    return [net.vertices[i] for i in sorted(best)]


def password(names: Iterable[str]) -> str:
    members = sorted(names)
    if not members:
        raise UsageError("password needs at least one computer")
    return ",".join(members)
