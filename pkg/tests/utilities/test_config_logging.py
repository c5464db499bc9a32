from __future__ import annotations

import logging.config

from aoc_helper.utilities.config_logging import LOGGING, build_logging_config


def test_console_handler_writes_to_stderr():
    """Positive: answers own stdout, so the console handler must use stderr."""
    assert LOGGING["handlers"]["console"]["stream"] == "ext://sys.stderr"


def test_build_logging_config_sets_level_without_mutating_base():
    # Act
    config = build_logging_config("debug")

    # Assert
    assert config["handlers"]["console"]["level"] == "DEBUG"
    assert LOGGING["handlers"]["console"]["level"] == "WARNING", "base mapping must stay untouched"
    assert "file" not in config["handlers"]


def test_build_logging_config_adds_rotating_file(tmp_path):
    """Positive: a log file adds a rotating handler on the root logger and is accepted by dictConfig."""
    # Arrange
    target = tmp_path / "run.log"

    # Act
    config = build_logging_config("WARNING", str(target))
    logging.config.dictConfig(config)
    logging.getLogger("aoc_helper.test").debug("hello file")
    for handler in logging.getLogger().handlers:
        handler.flush()

    # Assert
    assert config["handlers"]["file"]["class"] == "logging.handlers.RotatingFileHandler"
    assert "file" in config["loggers"][""]["handlers"]
    assert "hello file" in target.read_text(encoding="utf-8")

    logging.config.dictConfig(build_logging_config())
