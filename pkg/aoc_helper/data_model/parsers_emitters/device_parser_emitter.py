# aoc_helper/data_model/parsers_emitters/device_parser_emitter.py
from __future__ import annotations

import re

from aoc_helper.data_model.interfaces import IParserEmitter, PuzzleFileType
from aoc_helper.data_model.puzzle_types import Device
from aoc_helper.utilities.core_util import is_null_or_whitespace, numbered_lines, split_csv_ints
from aoc_helper.utilities.errors import PuzzleParseError

_REGISTER = re.compile(r"^Register\s+([ABC])\s*:\s*(\d+)\s*$")
_PROGRAM = re.compile(r"^Program\s*:\s*(.*)$")


class DeviceParserEmitter(IParserEmitter[Device]):
    """
    Register/program listing::

        Register A: 729
        Register B: 0
        Register C: 0

        Program: 0,1,5,4,3,0
    """

    file_format: PuzzleFileType = PuzzleFileType.DEVICE

    def parse(self, unparsed_string: str) -> Device:
        registers: dict[str, int] = {}
        program: tuple[int, ...] | None = None
        for number, raw in numbered_lines(unparsed_string):
            if is_null_or_whitespace(raw):
                continue
            line = raw.strip()
            if reg := _REGISTER.match(line):
                name, value = reg.groups()
                if name in registers:
                    raise PuzzleParseError(f"register {name} given twice", number, line)
                registers[name] = int(value)
                continue
            if prog := _PROGRAM.match(line):
                if program is not None:
                    raise PuzzleParseError("program given twice", number, line)
                program = self._parse_program(prog.group(1), number, line)
                continue
            raise PuzzleParseError("unrecognized line", number, line)
        missing = [f"Register {r}" for r in "ABC" if r not in registers]
        if program is None:
            missing.append("Program")
        if missing:
            raise PuzzleParseError(f"missing field(s): {', '.join(missing)}")
        return Device(registers["A"], registers["B"], registers["C"], program)  # type: ignore[arg-type]

    def emit(self, item: Device) -> str:
        codes = ",".join(map(str, item.program))
        return (
            f"Register A: {item.a}\nRegister B: {item.b}\nRegister C: {item.c}\n"
            f"\nProgram: {codes}\n"
        )

    @staticmethod
    def _parse_program(raw: str, number: int, line: str) -> tuple[int, ...]:
        try:
            codes = split_csv_ints(raw)
        except ValueError:
            raise PuzzleParseError("program codes must be integers", number, line) from None
        if not codes:
            raise PuzzleParseError("empty program", number, line)
        bad = [c for c in codes if not 0 <= c <= 7]
        if bad:
            raise PuzzleParseError(f"program code(s) {bad} outside 0..7", number, line)
        return tuple(codes)
