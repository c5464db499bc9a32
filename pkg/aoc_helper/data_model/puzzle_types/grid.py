# aoc_helper/data_model/puzzle_types/grid.py
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from aoc_helper.data_model.interfaces import Heading

WALL = "#"
OPEN = "."
START = "S"
END = "E"


@dataclass(frozen=True)
class PoseState:
    """Reindeer pose: 1-based cell plus heading."""

    row: int
    col: int
    heading: Heading

    @property
    def cell(self) -> tuple[int, int]:
        return (self.row, self.col)


@dataclass(frozen=True, eq=False)
class Grid:
    """
    Rectangular maze.

    ``cells`` is a numpy array of single characters indexed 0-based; every
    public coordinate is 1-based ``(row, col)``.
    """

    cells: np.ndarray
    start: tuple[int, int]
    end: tuple[int, int]

    @property
    def rows(self) -> int:
        return int(self.cells.shape[0])

    @property
    def cols(self) -> int:
        return int(self.cells.shape[1])

    def at(self, row: int, col: int) -> str:
        return str(self.cells[row - 1, col - 1])

    def is_open(self, row: int, col: int) -> bool:
        return 1 <= row <= self.rows and 1 <= col <= self.cols and self.at(row, col) != WALL

    def open_cells(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(self.cells != WALL)
        return sorted((int(r) + 1, int(c) + 1) for r, c in zip(rows, cols))

    def lines(self) -> list[str]:
        return ["".join(row) for row in self.cells.tolist()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grid):
            return NotImplemented
        return (
            self.start == other.start
            and self.end == other.end
            and np.array_equal(self.cells, other.cells)
        )

    __hash__ = None  # type: ignore[assignment]
