from __future__ import annotations

import pytest

from aoc_helper.data_model.parsers_emitters import NetworkParserEmitter
from aoc_helper.utilities.errors import PuzzleParseError


def test_parse_network_counts_vertices_and_edges():
    net = NetworkParserEmitter().parse("ta-ka\nka-de\n")
    assert len(net.vertices) == 3
    assert len(net.edges) == 2


def test_parse_network_dedups_symmetric_lines():
    """Edge: a-b and b-a are the same edge."""
    net = NetworkParserEmitter().parse("ta-ka\nka-ta\n")
    assert len(net.edges) == 1


@pytest.mark.parametrize("text", ["ta_ka\n", "ta-ka\nt-ka\n", "aa-aa\n"])
def test_parse_network_rejects_malformed(text):
    with pytest.raises(PuzzleParseError) as info:
        NetworkParserEmitter().parse(text)
    assert info.value.line_number is not None


def test_emit_network_is_reparsable():
    pe = NetworkParserEmitter()
    net = pe.parse("ta-ka\nka-de\nde-ta\n")
    assert pe.parse(pe.emit(net)) == net
