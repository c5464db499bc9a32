# aoc_helper/controllers/maze.py
"""
Reindeer maze: cheapest route from S (facing east) to E, where a step forward
costs 1 and a quarter turn costs 1000, and the tiles on any cheapest route.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterator, Optional, Union

from aoc_helper.data_model.interfaces import Heading
from aoc_helper.data_model.parsers_emitters import MazeParserEmitter
from aoc_helper.data_model.puzzle_types import Grid, PoseState
from aoc_helper.search import CostTable, dijkstra_all, dijkstra_goal
from aoc_helper.utilities.core_util import read_puzzle_text

log = logging.getLogger(__name__)

MOVE_COST = 1
TURN_COST = 1000
START_HEADING = Heading.RIGHT


def parse_maze(text: str) -> Grid:
    return MazeParserEmitter().parse(text)


def load_maze(path: Union[str, Path]) -> Grid:
    return parse_maze(read_puzzle_text(path))


# region Edges

def _turns(pose: PoseState) -> Iterator[tuple[PoseState, int]]:
    for heading in pose.heading.rotations():
        yield PoseState(pose.row, pose.col, heading), TURN_COST


def forward_edges(grid: Grid):
    """Successors of a pose: one step ahead if open, or a quarter turn."""

    def expand(pose: PoseState) -> Iterator[tuple[PoseState, int]]:
        row, col = pose.row + pose.heading.d_row, pose.col + pose.heading.d_col
        if grid.is_open(row, col):
            yield PoseState(row, col, pose.heading), MOVE_COST
        yield from _turns(pose)

    return expand


def backward_edges(grid: Grid):
    """Predecessors of a pose: the cell behind it with the same heading, or a quarter turn."""

    def expand(pose: PoseState) -> Iterator[tuple[PoseState, int]]:
        row, col = pose.row - pose.heading.d_row, pose.col - pose.heading.d_col
        if grid.is_open(row, col):
            yield PoseState(row, col, pose.heading), MOVE_COST
        yield from _turns(pose)

    return expand

# endregion Edges


def _start_pose(grid: Grid) -> PoseState:
    return PoseState(*grid.start, START_HEADING)


def forward_costs(grid: Grid) -> CostTable[PoseState]:
    """Cheapest cost from the start pose to every reachable pose."""
    return dijkstra_all([(_start_pose(grid), 0)], forward_edges(grid))


def backward_costs(grid: Grid) -> CostTable[PoseState]:
    """Cheapest cost from every pose to E, arriving in any heading."""
    return dijkstra_all([(PoseState(*grid.end, h), 0) for h in Heading], backward_edges(grid))


def min_cost(grid: Grid) -> Optional[int]:
    """Cheapest route cost, or ``None`` when E is unreachable."""
    found = dijkstra_goal([(_start_pose(grid), 0)], forward_edges(grid), lambda p: p.cell == grid.end)
    return None if found is None else found.cost


def optimal_tiles(grid: Grid) -> Optional[int]:
    """
    Number of tiles lying on at least one cheapest route.

    A pose is on a cheapest route exactly when its forward and backward
    costs add up to the minimum.
    """
    forward = forward_costs(grid)
    arrivals = [c for h in Heading if (c := forward.get(PoseState(*grid.end, h))) is not None]
    if not arrivals:
        return None
    best = min(arrivals)
    backward = backward_costs(grid)
    tiles = {pose.cell for pose in forward if pose in backward and forward[pose] + backward[pose] == best}
    tiles.update((grid.start, grid.end))
    log.info("min cost %d, %d tiles on optimal routes", best, len(tiles))
    return len(tiles)


def via_point_oracle(grid: Grid) -> Optional[int]:
    """
    Tile count by brute force: a tile counts when the cheapest route forced
    through it costs no more than the overall minimum.

    The leg back to S is searched with forward edges starting from the
    reversed heading and must arrive facing west; the leg to E starts from
    the opposite heading. Two Dijkstra runs per tile and heading, so keep
    grids small.
    """
    best = min_cost(grid)
    if best is None:
        return None
    expand = forward_edges(grid)
    count = 2
    for cell in grid.open_cells():
        if cell in (grid.start, grid.end):
            continue
        for heading in Heading:
            back = dijkstra_goal(
                [(PoseState(*cell, heading), 0)],
                expand,
                lambda p: p.cell == grid.start and p.heading is START_HEADING.opposite(),
            )
            if back is None or back.cost > best:
                continue
            ahead = dijkstra_goal(
                [(PoseState(*cell, heading.opposite()), 0)], expand, lambda p: p.cell == grid.end
            )
            if ahead is not None and back.cost + ahead.cost == best:
                count += 1
                break
    return count
