from __future__ import annotations

import logging.config

import pytest
from click.testing import CliRunner
from conftest import SAMPLE_CODES, SMALL_MAZE

from aoc_helper.cli import app
from aoc_helper.controllers import wires

DEVICE_729 = "Register A: 729\nRegister B: 0\nRegister C: 0\n\nProgram: 0,1,5,4,3,0\n"
PRINT_THEN_SHIFT = "Register A: 0\nRegister B: 0\nRegister C: 0\n\nProgram: 5,4,0,3,3,0\n"
THREE_GATES = "x00: 1\nx01: 1\nx02: 1\ny00: 0\ny01: 1\ny02: 0\n\nx00 AND y00 -> z00\nx01 XOR y01 -> z01\nx02 OR y02 -> z02\n"
REAL_CONFIGURE_LOGGING = app._configure_logging


@pytest.fixture(autouse=True)
def quiet_logging(monkeypatch):
    """Keep dictConfig from binding handlers to the runner's temporary streams."""
    monkeypatch.setattr(app, "_configure_logging", lambda verbose, log_file: None)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _invoke(runner, args, text=None, tmp_path=None):
    if tmp_path is not None and text is not None:
        puzzle = tmp_path / "puzzle.txt"
        puzzle.write_text(text, encoding="utf-8")
        return runner.invoke(app.cli, [*args, "--input", str(puzzle)])
    return runner.invoke(app.cli, args, input=text)


# ---------------------------
# Answers
# ---------------------------


@pytest.mark.parametrize(
    "args,text,expected",
    [
        (["16", "1"], SMALL_MAZE, "1004"),
        (["16", "2"], SMALL_MAZE, "5"),
        (["16", "2", "--solver", "oracle"], SMALL_MAZE, "5"),
        (["17", "1"], DEVICE_729, "4,6,3,5,6,3,5,2,1,0"),
        (["17", "2", "--target", "1,1"], PRINT_THEN_SHIFT, "9"),
        (["17", "2", "--target", "7", "--solver", "oracle"], PRINT_THEN_SHIFT, "7"),
        (["21", "1"], "\n".join(SAMPLE_CODES) + "\n", "126384"),
        (["21", "1", "--solver", "oracle"], "\n".join(SAMPLE_CODES) + "\n", "126384"),
        (["23", "1"], "ka-co\nta-co\nde-co\nta-de\nka-de\nka-ta\n", "3"),
        (["23", "2"], "ka-co\nta-co\nde-co\nta-de\nka-de\nka-ta\n", "co,de,ka,ta"),
        (["23", "2", "--solver", "oracle"], "ka-co\nta-co\nde-co\nta-de\nka-de\nka-ta\n", "co,de,ka,ta"),
        (["24", "1"], THREE_GATES, "4"),
    ],
)
def test_solve_prints_answer_from_file(runner, tmp_path, args, text, expected):
    # Act
    result = _invoke(runner, args, text, tmp_path)

    # Assert
    assert result.exit_code == app.EXIT_OK, result.output
    assert result.stdout == expected + "\n"


def test_solve_reads_stdin(runner):
    result = _invoke(runner, ["16", "1"], SMALL_MAZE)
    assert result.exit_code == app.EXIT_OK
    assert result.stdout == "1004\n"


def test_explicit_solve_command(runner):
    result = _invoke(runner, ["solve", "16", "1"], SMALL_MAZE)
    assert result.stdout == "1004\n"


def test_keypad_layers_flag(runner):
    result = _invoke(runner, ["21", "2", "--layers", "2"], "\n".join(SAMPLE_CODES) + "\n")
    assert result.stdout == "126384\n"


def test_circuit_repair_round_trip(runner, tmp_path):
    """Positive: the CLI answer matches a direct call with the same seed."""
    # Arrange
    generated = wires.gen_instance(4, 1, seed=3)
    expected = ",".join(wires.find_swaps_sat(wires.parse_circuit(generated.text), 1, seed=2))

    # Act
    result = _invoke(runner, ["24", "2", "--pairs", "1", "--seed", "2"], generated.text, tmp_path)

    # Assert
    assert result.exit_code == app.EXIT_OK, result.output
    assert result.stdout == expected + "\n"


def test_structural_solver(runner, tmp_path):
    generated = wires.gen_instance(8, 0, seed=1)
    result = _invoke(runner, ["24", "2", "--solver", "structural"], generated.text, tmp_path)
    assert result.exit_code == app.EXIT_OK
    assert result.stdout == "\n", "a correct adder has nothing to flag"


def test_dimacs_is_written_before_solving(runner, tmp_path):
    # Arrange
    out = tmp_path / "clique.cnf"

    # Act
    result = _invoke(runner, ["23", "2", "--dimacs", str(out)], "ka-co\nta-co\nka-ta\nqp-ta\n", tmp_path)

    # Assert
    assert result.exit_code == app.EXIT_OK
    assert out.read_text(encoding="utf-8").startswith("p cnf 4 ")


# ---------------------------
# Exit statuses
# ---------------------------


def test_no_solution_exit_status(runner):
    """Negative: an unreachable target prints nothing and exits 1."""
    result = _invoke(runner, ["17", "2"], PRINT_THEN_SHIFT)
    assert result.exit_code == app.EXIT_NO_SOLUTION
    assert result.stdout == ""


def test_unsolvable_swap_count_exit_status(runner, tmp_path):
    generated = wires.gen_instance(4, 1, seed=5)
    result = _invoke(runner, ["24", "2", "--pairs", "0"], generated.text, tmp_path)
    assert result.exit_code == app.EXIT_NO_SOLUTION


@pytest.mark.parametrize(
    "args,text",
    [
        (["16", "1", "--layers", "3"], SMALL_MAZE),
        (["18", "1"], SMALL_MAZE),
        (["23", "1"], "not a network\n"),
        (["17", "2", "--target", "1,x"], PRINT_THEN_SHIFT),
        (["17", "2", "--target", "9"], PRINT_THEN_SHIFT),
        (["17", "2"], "Register A: 0\nRegister B: 0\nRegister C: 0\n\nProgram: 0,3,5,4\n"),
    ],
    ids=["misplaced-flag", "bad-day", "bad-input", "bad-target-text", "bad-target-code", "unsupported-shape"],
)
def test_usage_errors_exit_two(runner, args, text):
    result = _invoke(runner, args, text)
    assert result.exit_code == app.EXIT_USAGE
    assert result.stdout == ""


def test_solve_function_validates_config():
    with pytest.raises(ValueError):
        app.solve(app.RunConfig(16, 1, layers=2), SMALL_MAZE)


# ---------------------------
# Generator
# ---------------------------


def test_gen_emits_circuit_and_answer(runner):
    # Act
    result = runner.invoke(app.cli, ["gen", "--bits", "4", "--pairs", "1", "--seed", "3"])

    # Assert
    generated = wires.gen_instance(4, 1, seed=3)
    assert result.exit_code == app.EXIT_OK
    assert result.stdout == generated.text + f"# answer: {','.join(generated.answer)}\n"
    assert len(wires.parse_circuit(result.stdout).gates) == 17, "the answer line is a comment"


def test_gen_rejects_narrow_adder(runner):
    result = runner.invoke(app.cli, ["gen", "--bits", "1", "--pairs", "0"])
    assert result.exit_code == app.EXIT_USAGE
    assert result.stdout == ""


# ---------------------------
# Logging
# ---------------------------


def test_verbose_flag_configures_debug_logging(monkeypatch, runner, tmp_path):
    """Positive: -v lowers the console level and --log-file adds the rotating handler."""
    # Arrange
    captured = []
    monkeypatch.setattr(app, "_configure_logging", REAL_CONFIGURE_LOGGING)
    monkeypatch.setattr(logging.config, "dictConfig", captured.append)
    log_file = tmp_path / "aoc.log"

    # Act
    result = runner.invoke(app.cli, ["16", "1", "-v", "--log-file", str(log_file)], input=SMALL_MAZE)

    # Assert
    assert result.exit_code == app.EXIT_OK
    assert len(captured) == 1
    assert captured[0]["handlers"]["console"]["level"] == "DEBUG"
    assert captured[0]["handlers"]["file"]["filename"] == str(log_file)


def test_default_logging_is_warning(monkeypatch, runner):
    captured = []
    monkeypatch.setattr(app, "_configure_logging", REAL_CONFIGURE_LOGGING)
    monkeypatch.setattr(logging.config, "dictConfig", captured.append)
    runner.invoke(app.cli, ["gen", "--bits", "2", "--pairs", "0"])
    assert captured[0]["handlers"]["console"]["level"] == "WARNING"
    assert "file" not in captured[0]["handlers"]
