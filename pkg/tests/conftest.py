# tests/conftest.py
from __future__ import annotations

import pytest

# Shared puzzle snippets. Pytest puts this directory on sys.path, which is also
# how test modules import the brute-force helpers in ``oracles.py``.

SMALL_MAZE = "#####\n#..E#\n#.#.#\n#S..#\n#####\n"
CORRIDOR_MAZE = "####\n#SE#\n####\n"
SAMPLE_CODES = ["029A", "980A", "179A", "456A", "379A"]
DEVICE_PROGRAM = (2, 4, 1, 1, 7, 5, 4, 6, 0, 3, 1, 4, 5, 5, 3, 0)
SELF_PRINTING_PROGRAM = (2, 4, 1, 5, 7, 5, 0, 3, 4, 0, 1, 6, 5, 5, 3, 0)
SELF_PRINTING_A = 109019476330651
K4_WITH_PENDANT = "ka-co\nta-co\nde-co\nta-de\nka-de\nka-ta\nqp-ta\nqp-ub\n"


@pytest.fixture
def small_maze_text() -> str:
    return SMALL_MAZE


@pytest.fixture
def device_text() -> str:
    return "Register A: 0\nRegister B: 0\nRegister C: 0\n\nProgram: " + ",".join(map(str, DEVICE_PROGRAM)) + "\n"


@pytest.fixture
def k4_text() -> str:
    return K4_WITH_PENDANT
