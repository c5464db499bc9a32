from __future__ import annotations

import pytest

from aoc_helper.data_model.parsers_emitters import CodesParserEmitter
from aoc_helper.utilities.errors import PuzzleParseError


def test_parse_codes_skips_blank_lines():
    assert CodesParserEmitter().parse("029A\n\n980A\n") == ["029A", "980A"]


@pytest.mark.parametrize("line", ["029", "A", "02B9A"])
def test_parse_codes_rejects_bad_code(line):
    with pytest.raises(PuzzleParseError):
        CodesParserEmitter().parse(line + "\n")
