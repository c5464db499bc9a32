# aoc_helper/data_model/puzzle_types/device.py
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Device:
    """Initial register file and program of the three-register computer."""

    a: int
    b: int
    c: int
    program: tuple[int, ...]

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            if getattr(self, name) < 0:
                raise ValueError(f"register {name.upper()} must be nonnegative")
        bad = [code for code in self.program if not 0 <= code <= 7]
        if bad:
            raise ValueError(f"program codes must be in 0..7, got {bad}")


@dataclass
class Machine:
    """
    Mutable run state of the computer.

    ``ip`` advances by 2 after every instruction except a taken jump. The
    machine halts when ``ip`` runs past the program.
    """

    program: tuple[int, ...]
    a: int = 0
    b: int = 0
    c: int = 0
    ip: int = 0
    output: list[int] = field(default_factory=list)
    steps: int = 0

    @property
    def halted(self) -> bool:
        return self.ip >= len(self.program)
