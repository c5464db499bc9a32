# aoc_helper/data_model/puzzle_types/keypad.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from aoc_helper.data_model.interfaces import Heading


@dataclass(frozen=True)
class Keypad:
    """
    Key layout as ``symbol -> (row, col)`` plus the forbidden gap cell.

    The arm starts over 'A'. Moving onto the gap or off the grid is illegal.
    """

    name: str
    layout: dict[str, tuple[int, int]]
    gap: tuple[int, int]
    _by_cell: dict[tuple[int, int], str] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.gap in self.layout.values():
            raise ValueError(f"{self.name}: gap {self.gap} overlaps a key")
        object.__setattr__(self, "_by_cell", {cell: key for key, cell in self.layout.items()})

    def position(self, key: str) -> tuple[int, int]:
        try:
            return self.layout[key]
        except KeyError:
            raise ValueError(f"{self.name} keypad has no key {key!r}") from None

    def key_at(self, cell: tuple[int, int]) -> Optional[str]:
        return self._by_cell.get(cell)

    def step(self, cell: tuple[int, int], heading: Heading) -> Optional[tuple[int, int]]:
        """Neighbor cell in ``heading`` if it is a real key, else ``None``."""
        target = (cell[0] + heading.d_row, cell[1] + heading.d_col)
        return target if target in self._by_cell else None


# +---+---+---+
# | 7 | 8 | 9 |
# | 4 | 5 | 6 |
# | 1 | 2 | 3 |
#     | 0 | A |
NUMERIC_PAD = Keypad(
    name="numeric",
    layout={
        "7": (0, 0), "8": (0, 1), "9": (0, 2),
        "4": (1, 0), "5": (1, 1), "6": (1, 2),
        "1": (2, 0), "2": (2, 1), "3": (2, 2),
        "0": (3, 1), "A": (3, 2),
    },
    gap=(3, 0),
)

#     | ^ | A |
# | < | v | > |
DIRECTIONAL_PAD = Keypad(
    name="directional",
    layout={
        "^": (0, 1), "A": (0, 2),
        "<": (1, 0), "v": (1, 1), ">": (1, 2),
    },
    gap=(0, 0),
)
