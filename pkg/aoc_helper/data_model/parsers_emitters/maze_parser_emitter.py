# aoc_helper/data_model/parsers_emitters/maze_parser_emitter.py
from __future__ import annotations

import numpy as np

from aoc_helper.data_model.interfaces import IParserEmitter, PuzzleFileType
from aoc_helper.data_model.puzzle_types import END, OPEN, START, WALL, Grid
from aoc_helper.utilities.core_util import is_null_or_whitespace, numbered_lines
from aoc_helper.utilities.errors import PuzzleParseError

_ALLOWED = frozenset((WALL, OPEN, START, END))


class MazeParserEmitter(IParserEmitter[Grid]):
    """Rectangular ``#``/``.``/``S``/``E`` grid with a wall border."""

    file_format: PuzzleFileType = PuzzleFileType.MAZE

    def parse(self, unparsed_string: str) -> Grid:
        rows: list[str] = []
        start = end = None
        for number, raw in numbered_lines(unparsed_string):
            if is_null_or_whitespace(raw):
                continue
            line = raw.strip()
            if rows and len(line) != len(rows[0]):
                raise PuzzleParseError(
                    f"ragged row: width {len(line)}, expected {len(rows[0])}", number, line
                )
            if bad := set(line) - _ALLOWED:
                raise PuzzleParseError(f"unexpected character(s) {sorted(bad)}", number, line)
            row = len(rows) + 1
            for col, char in enumerate(line, start=1):
                if char == START:
                    if start is not None:
                        raise PuzzleParseError("more than one start 'S'", number, line)
                    start = (row, col)
                elif char == END:
                    if end is not None:
                        raise PuzzleParseError("more than one end 'E'", number, line)
                    end = (row, col)
            rows.append(line)
        if not rows:
            raise PuzzleParseError("empty maze")
        if start is None or end is None:
            raise PuzzleParseError("maze needs exactly one 'S' and one 'E'")
        cells = np.array([list(line) for line in rows], dtype="<U1")
        border = np.concatenate([cells[0], cells[-1], cells[:, 0], cells[:, -1]])
        if np.any(border != WALL):
            raise PuzzleParseError("maze border must be wall")
        return Grid(cells=cells, start=start, end=end)

    def emit(self, item: Grid) -> str:
        return "\n".join(item.lines()) + "\n"
