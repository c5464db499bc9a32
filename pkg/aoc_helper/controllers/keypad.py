# aoc_helper/controllers/keypad.py
"""
Keypad conundrum: shortest button sequences through stacked robot arms.

Plans are strings over ``<^v>A`` (the letters ``lurd`` are accepted on input).
Per-pad plans minimize (length, direction changes) with moves tried in the
order left, up, down, right; only the first plan found on ties is kept.
Deep layers are never materialized: a plan is cut into chunks ending in 'A'
and each chunk's length through ``N`` layers is memoized.
"""

from __future__ import annotations

import logging
from collections import deque
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from aoc_helper.data_model.interfaces import Heading
from aoc_helper.data_model.parsers_emitters import CodesParserEmitter
from aoc_helper.data_model.puzzle_types import DIRECTIONAL_PAD, NUMERIC_PAD, Keypad
from aoc_helper.search import ZERO, Derivation, LexObjective, MemoTable
from aoc_helper.utilities.core_util import read_puzzle_text
from aoc_helper.utilities.errors import UsageError

log = logging.getLogger(__name__)

PRESS = "A"
MOVE_ORDER = (Heading.LEFT, Heading.UP, Heading.DOWN, Heading.RIGHT)
DEFAULT_LAYERS = 25

Cell = tuple[int, int]
PlanKey = tuple[Optional[Heading], Cell, str]


def parse_codes(text: str) -> list[str]:
    return CodesParserEmitter().parse(text)


def load_codes(path: Union[str, Path]) -> list[str]:
    return parse_codes(read_puzzle_text(path))


def normalize_plan(plan: str) -> str:
    """Spell a plan with arrows; raises ``UsageError`` on unknown symbols."""
    try:
        return "".join(PRESS if ch == PRESS else Heading.from_symbol(ch).symbol for ch in plan)  # type: ignore[union-attr]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def simulate_plan(keypad: Keypad, plan: str) -> str:
    """Keys pressed when ``plan`` drives an arm that starts over 'A'."""
    cell = keypad.position(PRESS)
    typed = []
    for ch in normalize_plan(plan):
        if ch == PRESS:
            typed.append(keypad.key_at(cell))
            continue
        nxt = keypad.step(cell, Heading.from_symbol(ch))  # type: ignore[arg-type]
        if nxt is None:
            raise ValueError(f"{keypad.name} arm leaves the keys at {cell} moving {ch!r}")
        cell = nxt
    return "".join(typed)  # type: ignore[arg-type]


def _distance(a: Cell, b: Cell) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


class PadPlanner:
    """
    Optimal plans for typing a key sequence on one keypad.

    State is (previous move, arm cell, keys still to type); the previous move
    is ``None`` at the start and after every press, so the first move of each
    segment counts as a direction change. Only moves that shorten the distance
    to the next key are derived; any detour is strictly longer.
    """

    def __init__(self, keypad: Keypad) -> None:
        self.keypad = keypad
        self.table: MemoTable[PlanKey] = MemoTable(self._derive)

    def _derive(self, key: PlanKey) -> Iterator[Derivation[PlanKey]]:
        prev, cell, remaining = key
        if not remaining:
            yield Derivation(ZERO)
            return
        target = self.keypad.position(remaining[0])
        if cell == target:
            yield Derivation(LexObjective(1, 0), ((None, cell, remaining[1:]),), (PRESS,))
            return
        for heading in MOVE_ORDER:
            nxt = self.keypad.step(cell, heading)
            if nxt is None or _distance(nxt, target) >= _distance(cell, target):
                continue
            turn = 0 if heading is prev else 1
            yield Derivation(LexObjective(1, turn), ((heading, nxt, remaining),), (heading.symbol,))

    def plan(self, keys: str) -> str:
        for ch in keys:
            try:
                self.keypad.position(ch)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        solved = self.table.solve((None, self.keypad.position(PRESS), keys))
        assert solved is not None, "every key is reachable on a connected pad"
        return "".join(solved[1])

    def objective(self, keys: str) -> LexObjective:
        solved = self.table.solve((None, self.keypad.position(PRESS), keys))
        assert solved is not None
        return solved[0]


def num_pad_plan(code: str, planner: Optional[PadPlanner] = None) -> str:
    """
    Directional plan that types ``code`` on the numeric pad.

    Pass ``planner`` to share its memo table across calls of one run; without
    it every call plans with a fresh table.
    """
    return (planner or PadPlanner(NUMERIC_PAD)).plan(code)


def dir_pad_plan(chunk: str, planner: Optional[PadPlanner] = None) -> str:
    """Directional plan that types ``chunk`` on a directional pad."""
    if not chunk:
        raise UsageError("chunk must not be empty")
    return (planner or PadPlanner(DIRECTIONAL_PAD)).plan(normalize_plan(chunk))


def extract_chunk(plan: str) -> tuple[str, str]:
    """
    Split off the first chunk: non-'A' symbols followed by their run of 'A's,
    or just the leading 'A' run.
    """
    if not plan:
        raise UsageError("cannot take a chunk of an empty plan")
    end = 0
    while end < len(plan) and plan[end] != PRESS:
        end += 1
    while end < len(plan) and plan[end] == PRESS:
        end += 1
    return plan[:end], plan[end:]


class PlanTranslator:
    """
    Length of the human's sequence for a plan seen through ``levels``
    directional pads. One translator holds the memo tables of one run and is
    not shared between threads.
    """

    def __init__(self) -> None:
        self.planner = PadPlanner(DIRECTIONAL_PAD)
        self._chunk_lengths: dict[tuple[int, str], int] = {}

    def length(self, levels: int, plan: str) -> int:
        if levels < 0:
            raise UsageError(f"levels must be >= 0, got {levels}")
        plan = normalize_plan(plan)
        if levels == 0:
            return len(plan)
        total = 0
        rest = plan
        while rest:
            chunk, rest = extract_chunk(rest)
            total += self._chunk_length(levels, chunk)
        return total

    def _chunk_length(self, levels: int, chunk: str) -> int:
        if chunk.count(PRESS) == len(chunk):
            return len(chunk)
        key = (levels, chunk)
        cached = self._chunk_lengths.get(key)
        if cached is None:
            cached = self.length(levels - 1, dir_pad_plan(chunk, self.planner))
            self._chunk_lengths[key] = cached
        return cached

    def __len__(self) -> int:
        return len(self._chunk_lengths)


def trans_plan_len(levels: int, plan: str, translator: Optional[PlanTranslator] = None) -> int:
    return (translator or PlanTranslator()).length(levels, plan)


def numeric_part(code: str) -> int:
    digits = "".join(ch for ch in code if ch.isdigit())
    if not digits:
        raise UsageError(f"code {code!r} has no digits")
    return int(digits)


def complexity_sum(codes: Iterable[str], levels: int = DEFAULT_LAYERS) -> int:
    planner = PadPlanner(NUMERIC_PAD)
    translator = PlanTranslator()
    total = 0
    for code in codes:
        length = translator.length(levels, num_pad_plan(code, planner))
        log.debug("code %s: %d presses at %d layers", code, length, levels)
        total += numeric_part(code) * length
    log.info("complexity sum %d (%d memoized chunks)", total, len(translator))
    return total


# region Brute force

def brute_force_press_count(code: str, layers: int) -> int:
    """
    Fewest human presses to type ``code``, by breadth-first search over every
    arm position of the whole stack. Exponential in ``layers``.
    """
    if layers < 0:
        raise UsageError(f"layers must be >= 0, got {layers}")
    for ch in code:
        if ch not in NUMERIC_PAD.layout:
            raise UsageError(f"numeric keypad has no key {ch!r}")
    if not code:
        return 0
    home_dir = DIRECTIONAL_PAD.position(PRESS)
    start = ((home_dir,) * layers, NUMERIC_PAD.position(PRESS), 0)
    seen = {start}
    queue = deque([(start, 0)])
    buttons = [PRESS, *(h.symbol for h in Heading)]
    while queue:
        state, presses = queue.popleft()
        for button in buttons:
            nxt = _press(state, button, code)
            if nxt is None or nxt in seen:
                continue
            if nxt[2] == len(code):
                return presses + 1
            seen.add(nxt)
            queue.append((nxt, presses + 1))
    raise UsageError(f"code {code!r} cannot be typed")


def _press(state, button: str, code: str):
    """Propagate one human press down the stack; ``None`` if it is illegal."""
    arms, numeric, typed = state
    arms = list(arms)
    level = len(arms) - 1
    while level >= 0 and button == PRESS:
        button = DIRECTIONAL_PAD.key_at(arms[level])  # type: ignore[assignment]
        level -= 1
    if level >= 0:
        moved = DIRECTIONAL_PAD.step(arms[level], Heading.from_symbol(button))  # type: ignore[arg-type]
        if moved is None:
            return None
        arms[level] = moved
        return (tuple(arms), numeric, typed)
    if button == PRESS:
        if NUMERIC_PAD.key_at(numeric) != code[typed]:
            return None
        return (tuple(arms), numeric, typed + 1)
    moved = NUMERIC_PAD.step(numeric, Heading.from_symbol(button))  # type: ignore[arg-type]
    if moved is None:
        return None
    return (tuple(arms), moved, typed)

# endregion Brute force
