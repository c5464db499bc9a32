# aoc_helper/data_model/parsers_emitters/codes_parser_emitter.py
from __future__ import annotations

import re

from aoc_helper.data_model.interfaces import IParserEmitter, PuzzleFileType
from aoc_helper.utilities.core_util import is_null_or_whitespace, numbered_lines
from aoc_helper.utilities.errors import PuzzleParseError

_CODE = re.compile(r"^[0-9]+A$")


class CodesParserEmitter(IParserEmitter[list[str]]):
    """Door codes, one per line, each digits followed by 'A'."""

    file_format: PuzzleFileType = PuzzleFileType.CODES

    def parse(self, unparsed_string: str) -> list[str]:
        codes = []
        for number, raw in numbered_lines(unparsed_string):
            if is_null_or_whitespace(raw):
                continue
            line = raw.strip()
            if not _CODE.match(line):
                raise PuzzleParseError("door code must be digits followed by 'A'", number, line)
            codes.append(line)
        return codes

    def emit(self, item: list[str]) -> str:
        return "".join(f"{code}\n" for code in item)
