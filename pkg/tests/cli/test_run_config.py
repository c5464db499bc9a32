from __future__ import annotations

from pathlib import Path

import pytest

from aoc_helper.cli.run_config import DEFAULT_PAIRS, PART1_LAYERS, PART2_LAYERS, RunConfig
from aoc_helper.utilities.errors import UsageError


def test_defaults_validate():
    config = RunConfig(23, 2)
    assert config.validate() is config
    assert config.task == (23, 2)
    assert config.solver == "sat" and config.seed == 1


def test_effective_layers_follow_part():
    assert RunConfig(21, 1).effective_layers == PART1_LAYERS
    assert RunConfig(21, 2).effective_layers == PART2_LAYERS
    assert RunConfig(21, 2, layers=3).effective_layers == 3


def test_effective_pairs_default():
    assert RunConfig(24, 2).effective_pairs == DEFAULT_PAIRS
    assert RunConfig(24, 2, pairs=1).effective_pairs == 1


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(day=16, part=1, solver="oracle"),
        dict(day=17, part=2, solver="oracle", bv_width=48),
        dict(day=21, part=2, layers=0),
        dict(day=23, part=2, dimacs=Path("out.cnf")),
        dict(day=24, part=2, solver="structural", pairs=2),
        dict(day=24, part=2, trainings=10, pairs=1, seed=0),
        dict(day=17, part=2, target=(3, 0), bv_width=3),
    ],
    ids=["16-1-oracle", "17-2-oracle-width", "layers-zero", "dimacs", "structural-pairs", "trainings", "target"],
)
def test_flag_placement(kwargs):
    """Positive for the last five, negative for the first two."""
    config = RunConfig(**kwargs)
    if kwargs.get("solver") == "oracle":
        with pytest.raises(UsageError):
            config.validate()
    else:
        config.validate()


@pytest.mark.parametrize(
    "kwargs,fragment",
    [
        (dict(day=18, part=1), "day must be one of"),
        (dict(day=16, part=3), "part must be 1 or 2"),
        (dict(day=23, part=2, solver="structural"), "not available"),
        (dict(day=16, part=1, layers=3), "--layers does not apply"),
        (dict(day=24, part=2, solver="structural", trainings=5), "--trainings does not apply"),
        (dict(day=24, part=1, pairs=2), "--pairs does not apply"),
        (dict(day=17, part=1, target=(1,)), "--target does not apply"),
        (dict(day=16, part=2, dimacs=Path("x.cnf")), "--dimacs does not apply"),
        (dict(day=21, part=1, layers=-1), "--layers must be >= 0"),
        (dict(day=24, part=2, trainings=0), "--trainings must be >= 1"),
        (dict(day=16, part=1, seed=-2), "--seed must be >= 0"),
        (dict(day=17, part=2, bv_width=2), "--bv-width must be >= 3"),
    ],
)
def test_invalid_configs(kwargs, fragment):
    """Negative: each misuse names the offending flag or value."""
    with pytest.raises(UsageError) as info:
        RunConfig(**kwargs).validate()
    assert fragment in str(info.value), f"unexpected message {info.value!s}"
