from __future__ import annotations

import random

import pytest
from conftest import CORRIDOR_MAZE
from oracles import enumerate_route_tiles, random_maze

from aoc_helper.controllers import maze
from aoc_helper.data_model.interfaces import Heading
from aoc_helper.data_model.puzzle_types import PoseState

TURN_THEN_STEP = "###\n#E#\n#S#\n###\n"
WALLED_OFF = "#####\n#S#E#\n#####\n"

EXAMPLE = """\
###############
#.......#....E#
#.#.###.#.###.#
#.....#.#...#.#
#.###.#####.#.#
#.#.#.......#.#
#.#.#####.###.#
#...........#.#
###.#.#####.#.#
#...#.....#.#.#
#.#.#.###.#.#.#
#.....#...#.#.#
#.###.#.#.#.#.#
#S..#.....#...#
###############
"""


# ---------------------------
# Minimum cost
# ---------------------------


@pytest.mark.parametrize(
    "text,expected",
    [(CORRIDOR_MAZE, 1), (TURN_THEN_STEP, 1001), ("#####\n#..E#\n#.#.#\n#S..#\n#####\n", 1004)],
)
def test_min_cost_small_mazes(text, expected):
    assert maze.min_cost(maze.parse_maze(text)) == expected


def test_small_maze_fixture(small_maze_text):
    grid = maze.parse_maze(small_maze_text)
    assert (maze.min_cost(grid), maze.optimal_tiles(grid)) == (1004, 5)


def test_unreachable_end_is_none():
    """Negative: every solver reports no route the same way."""
    grid = maze.parse_maze(WALLED_OFF)
    assert maze.min_cost(grid) is None
    assert maze.optimal_tiles(grid) is None
    assert maze.via_point_oracle(grid) is None


def test_example_maze():
    grid = maze.parse_maze(EXAMPLE)
    assert maze.min_cost(grid) == 7036
    assert maze.optimal_tiles(grid) == 45


# ---------------------------
# Cost tables
# ---------------------------


def test_cost_tables_are_anchored(small_maze_text):
    # Arrange
    grid = maze.parse_maze(small_maze_text)

    # Act
    forward = maze.forward_costs(grid)
    backward = maze.backward_costs(grid)

    # Assert
    assert forward[PoseState(*grid.start, Heading.RIGHT)] == 0
    assert forward[PoseState(*grid.start, Heading.UP)] == maze.TURN_COST
    assert all(backward[PoseState(*grid.end, h)] == 0 for h in Heading)
    assert backward[PoseState(*grid.start, Heading.RIGHT)] == 1004


def test_edges_mirror_each_other(small_maze_text):
    """Positive: a forward step from p to q is a backward step from q to p."""
    grid = maze.parse_maze(small_maze_text)
    ahead, behind = maze.forward_edges(grid), maze.backward_edges(grid)
    for cell in grid.open_cells():
        for heading in Heading:
            pose = PoseState(*cell, heading)
            for nxt, cost in ahead(pose):
                assert (pose, cost) in list(behind(nxt))


# ---------------------------
# Tiles on cheapest routes
# ---------------------------


def test_tiles_match_route_enumeration_on_random_mazes():
    rng = random.Random(16)
    for trial in range(30):
        # Arrange
        text = random_maze(rng, rng.randint(4, 7), rng.randint(4, 7), density=0.25)
        best, tiles = enumerate_route_tiles(text.splitlines())
        grid = maze.parse_maze(text)

        # Act / Assert
        assert maze.min_cost(grid) == best, f"trial {trial}\n{text}"
        assert maze.optimal_tiles(grid) == (len(tiles) if best is not None else None), f"trial {trial}\n{text}"


def test_via_point_oracle_agrees_on_random_mazes():
    rng = random.Random(1016)
    for trial in range(30):
        text = random_maze(rng, rng.randint(5, 13), rng.randint(5, 13), density=0.2)
        grid = maze.parse_maze(text)
        assert maze.via_point_oracle(grid) == maze.optimal_tiles(grid), f"trial {trial}\n{text}"


def test_via_point_oracle_small_maze(small_maze_text):
    assert maze.via_point_oracle(maze.parse_maze(small_maze_text)) == 5
