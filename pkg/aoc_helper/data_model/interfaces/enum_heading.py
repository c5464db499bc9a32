from enum import Enum
from typing import Optional


class Heading(Enum):
    """
    A unit move on a grid, as ``(d_row, d_col)``.

    The maze and the keypads share this vocabulary; ``symbol`` is the
    arrow spelling used in keypad plans.
    """

    LEFT = (0, -1)
    UP = (-1, 0)
    DOWN = (1, 0)
    RIGHT = (0, 1)

    @property
    def d_row(self) -> int:
        return self.value[0]

    @property
    def d_col(self) -> int:
        return self.value[1]

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    def opposite(self) -> "Heading":
        return _OPPOSITE[self]

    def rotations(self) -> tuple["Heading", "Heading"]:
        """The two headings a quarter turn away."""
        if self in (Heading.LEFT, Heading.RIGHT):
            return (Heading.UP, Heading.DOWN)
        return (Heading.LEFT, Heading.RIGHT)

    @classmethod
    def from_symbol(cls, char: str) -> Optional["Heading"]:
        """
        Map ``<^v>`` or ``lurd`` to a heading; ``None`` for the press key 'A'.
        """
        if char == "A":
            return None
        for heading in cls:
            if char in (_SYMBOLS[heading], _LETTERS[heading]):
                return heading
        raise ValueError(f"Unknown plan symbol: {char!r}")


_SYMBOLS = {Heading.LEFT: "<", Heading.UP: "^", Heading.DOWN: "v", Heading.RIGHT: ">"}
_LETTERS = {Heading.LEFT: "l", Heading.UP: "u", Heading.DOWN: "d", Heading.RIGHT: "r"}
_OPPOSITE = {
    Heading.LEFT: Heading.RIGHT,
    Heading.RIGHT: Heading.LEFT,
    Heading.UP: Heading.DOWN,
    Heading.DOWN: Heading.UP,
}
