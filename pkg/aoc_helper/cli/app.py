# aoc_helper/cli/app.py
"""
Console entry point.

    aoc <day> <part> [--input FILE] [--solver sat|oracle|structural] ...
    aoc gen --bits W --pairs K --seed N

stdout carries only the answer (or the generated circuit); diagnostics go to
stderr. Exit status: 0 solved, 1 no solution, 2 bad input or usage.
"""

from __future__ import annotations

import logging
import logging.config
import sys
from pathlib import Path
from typing import Callable, Optional

import click

from aoc_helper.controllers import ccrev, clique, keypad, maze, wires
from aoc_helper.data_model.parsers_emitters import write_dimacs
from aoc_helper.sat import CnfInstance
from aoc_helper.utilities.config_logging import build_logging_config
from aoc_helper.utilities.core_util import read_puzzle_text, split_csv_ints
from aoc_helper.utilities.errors import AocError, NoConsistentSwapError, PuzzleParseError, UsageError

from .run_config import SOLVERS, RunConfig

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_USAGE = 2

EncodedHook = Optional[Callable[[CnfInstance], None]]


# ---------------------------------------------------------------------------
# Per-task handlers: (config, input text, dimacs hook) -> answer or None
# ---------------------------------------------------------------------------

def _maze(config: RunConfig, text: str, _hook: EncodedHook) -> Optional[str]:
    grid = maze.parse_maze(text)
    if config.part == 1:
        result = maze.min_cost(grid)
    elif config.solver == "oracle":
        result = maze.via_point_oracle(grid)
    else:
        result = maze.optimal_tiles(grid)
    return None if result is None else str(result)


def _device(config: RunConfig, text: str, hook: EncodedHook) -> Optional[str]:
    device = ccrev.parse_device(text)
    if config.part == 1:
        return ",".join(map(str, ccrev.run(device.program, device.a, device.b, device.c)))
    if config.solver == "oracle":
        result = ccrev.reverse_min_a_dfs(device.program, config.target)
    else:
        result = ccrev.reverse_min_a_sat(device.program, config.target, config.bv_width, hook)
    return None if result is None else str(result)


def _keypad(config: RunConfig, text: str, _hook: EncodedHook) -> Optional[str]:
    codes = keypad.parse_codes(text)
    layers = config.effective_layers
    if config.solver == "oracle":
        total = sum(keypad.numeric_part(code) * keypad.brute_force_press_count(code, layers) for code in codes)
    else:
        total = keypad.complexity_sum(codes, layers)
    return str(total)


def _network(config: RunConfig, text: str, hook: EncodedHook) -> Optional[str]:
    net = clique.parse_network(text)
    if config.part == 1:
        return str(clique.count_t_triangles(net))
    members = clique.bron_kerbosch(net) if config.solver == "oracle" else clique.max_clique_sat(net, hook)
    return clique.password(members)


def _circuit(config: RunConfig, text: str, hook: EncodedHook) -> Optional[str]:
    circuit = wires.parse_circuit(text)
    if config.part == 1:
        return str(wires.eval_circuit(circuit))
    if config.solver == "structural":
        return ",".join(wires.ripple_structural_check(circuit))
    try:
        swapped = wires.find_swaps_sat(
            circuit, config.effective_pairs, trainings=config.trainings, seed=config.seed, on_encoded=hook
        )
    except NoConsistentSwapError as exc:
        log.warning("%s", exc)
        return None
    return ",".join(swapped)


HANDLERS: dict[int, Callable[[RunConfig, str, EncodedHook], Optional[str]]] = {
    16: _maze,
    17: _device,
    21: _keypad,
    23: _network,
    24: _circuit,
}


def _dimacs_hook(path: Optional[Path]) -> EncodedHook:
    if path is None:
        return None

    def write(instance: CnfInstance) -> None:
        path.write_text(write_dimacs(instance), encoding="utf-8")
        log.info("wrote %d clauses to %s", len(instance.clauses), path)

    return write


def solve(config: RunConfig, text: str) -> Optional[str]:
    """Answer line for ``config`` on puzzle ``text``, or ``None`` when there is no solution."""
    config.validate()
    return HANDLERS[config.day](config, text, _dimacs_hook(config.dimacs))


def run(config: RunConfig) -> int:
    """Solve, print the answer and return the exit status."""
    try:
        config.validate()
        text = read_puzzle_text(config.input_path) if config.input_path else sys.stdin.read()
        answer = solve(config, text)
    except (UsageError, PuzzleParseError) as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except AocError:
        log.exception("day %d part %d failed", config.day, config.part)
        return EXIT_USAGE
    if answer is None:
        log.warning("day %d part %d: no solution", config.day, config.part)
        return EXIT_NO_SOLUTION
    click.echo(answer)
    return EXIT_OK


# ---------------------------------------------------------------------------
# click wiring
# ---------------------------------------------------------------------------

class _DayGroup(click.Group):
    """Routes ``aoc 17 2 ...`` to the ``solve`` command."""

    def parse_args(self, ctx: click.Context, args: list[str]) -> list[str]:
        if args and args[0].isdigit():
            args = ["solve", *args]
        return super().parse_args(ctx, args)


def _logging_options(func):
    func = click.option("--log-file", type=click.Path(dir_okay=False), help="Also log to this rotating file.")(func)
    func = click.option("--verbose", "-v", is_flag=True, help="Log DEBUG to stderr.")(func)
    return func


def _configure_logging(verbose: bool, log_file: Optional[str]) -> None:
    logging.config.dictConfig(build_logging_config("DEBUG" if verbose else "WARNING", log_file))


def _parse_target(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[tuple[int, ...]]:
    if value is None:
        return None
    try:
        return tuple(split_csv_ints(value))
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


@click.group(cls=_DayGroup)
def cli() -> None:
    """Puzzle solvers: aoc <day> <part> or aoc gen."""


@cli.command("solve")
@click.argument("day", type=int)
@click.argument("part", type=int)
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--solver", type=click.Choice(SOLVERS), default="sat", show_default=True)
@click.option("--layers", type=int, help="Directional keypad layers (day 21).")
@click.option("--trainings", type=int, help="Training inputs for the swap model (day 24).")
@click.option("--pairs", type=int, help="Swapped output pairs (day 24).")
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--dimacs", type=click.Path(dir_okay=False, path_type=Path), help="Write the CNF before solving.")
@click.option("--bv-width", type=int, help="Bits of register A (day 17).")
@click.option("--target", callback=_parse_target, help="Output codes to reproduce, comma separated (day 17).")
@_logging_options
@click.pass_context
def solve_command(ctx: click.Context, verbose: bool, log_file: Optional[str], **options) -> None:
    """Solve one part of one day."""
    _configure_logging(verbose, log_file)
    ctx.exit(run(RunConfig(**options)))


@cli.command("gen")
@click.option("--bits", type=int, required=True, help="Adder width W.")
@click.option("--pairs", type=int, required=True, help="Output pairs to swap.")
@click.option("--seed", type=int, default=1, show_default=True)
@_logging_options
@click.pass_context
def gen_command(ctx: click.Context, bits: int, pairs: int, seed: int, verbose: bool, log_file: Optional[str]) -> None:
    """Emit a faulty adder circuit with its hidden answer as a '# answer:' line."""
    _configure_logging(verbose, log_file)
    try:
        instance = wires.gen_instance(bits, pairs, seed)
    except UsageError as exc:
        log.error("%s", exc)
        ctx.exit(EXIT_USAGE)
    except AocError:
        log.exception("generator failed")
        ctx.exit(EXIT_USAGE)
    click.echo(instance.text, nl=False)
    click.echo(f"# answer: {','.join(instance.answer)}")


def main() -> None:
    cli(prog_name="aoc")
