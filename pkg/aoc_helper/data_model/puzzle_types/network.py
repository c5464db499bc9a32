# aoc_helper/data_model/puzzle_types/network.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class Network:
    """
    Undirected computer network.

    Vertices keep first-appearance order from the input so that vertex ``i``
    always maps to the same SAT variable. Edges are stored as ``(i, j)`` index
    pairs with ``i < j``.
    """

    vertices: tuple[str, ...]
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        neighbors: list[set[int]] = [set() for _ in self.vertices]
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"self-loop on {self.vertices[i]!r}")
            if not (0 <= i < j < len(self.vertices)):
                raise ValueError(f"edge {(i, j)} is not a normalized index pair")
            neighbors[i].add(j)
            neighbors[j].add(i)
        object.__setattr__(self, "adjacency", tuple(frozenset(n) for n in neighbors))
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(self.vertices)})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "Network":
        """Build from name pairs; vertex order is first appearance."""
        names: dict[str, int] = {}
        edges: set[tuple[int, int]] = set()
        for a, b in pairs:
            i = names.setdefault(a, len(names))
            j = names.setdefault(b, len(names))
            edges.add((min(i, j), max(i, j)))
        return cls(tuple(names), frozenset(edges))

    def index(self, name: str) -> int:
        return self._index[name]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def max_degree(self) -> int:
        return max((len(n) for n in self.adjacency), default=0)

    def is_clique(self, members: Iterable[int]) -> bool:
        items = list(members)
        return all(
            self.has_edge(a, b) for pos, a in enumerate(items) for b in items[pos + 1:]
        )
