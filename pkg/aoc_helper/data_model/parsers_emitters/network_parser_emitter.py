# aoc_helper/data_model/parsers_emitters/network_parser_emitter.py
from __future__ import annotations

import re

from aoc_helper.data_model.interfaces import IParserEmitter, PuzzleFileType
from aoc_helper.data_model.puzzle_types import Network
from aoc_helper.utilities.core_util import is_null_or_whitespace, numbered_lines
from aoc_helper.utilities.errors import PuzzleParseError

_EDGE = re.compile(r"^([a-z]{2})-([a-z]{2})$")


class NetworkParserEmitter(IParserEmitter[Network]):
    """One ``xx-yy`` connection per line."""

    file_format: PuzzleFileType = PuzzleFileType.NETWORK

    def parse(self, unparsed_string: str) -> Network:
        pairs: list[tuple[str, str]] = []
        for number, raw in numbered_lines(unparsed_string):
            if is_null_or_whitespace(raw):
                continue
            line = raw.strip()
            match = _EDGE.match(line)
            if not match:
                raise PuzzleParseError("expected '<name>-<name>' with two-letter names", number, line)
            a, b = match.groups()
            if a == b:
                raise PuzzleParseError(f"self-loop on {a!r}", number, line)
            pairs.append((a, b))
        return Network.from_pairs(pairs)

    def emit(self, item: Network) -> str:
        names = item.vertices
        return "".join(f"{names[i]}-{names[j]}\n" for i, j in sorted(item.edges))
