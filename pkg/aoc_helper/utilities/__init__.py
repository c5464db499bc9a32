from .core_util import (
    open_for_read,
    is_null_or_whitespace,
    numbered_lines,
    read_puzzle_text,
    split_csv_ints,
)
from .config_logging import LOGGING, build_logging_config
from .errors import (
    AocError,
    CircuitEvaluationError,
    ExecutionError,
    GeneratorError,
    NoConsistentSwapError,
    PuzzleParseError,
    RecursionCycleError,
    SolverBudgetError,
    UnsupportedShapeError,
    UsageError,
)

__all__ = [
    "is_null_or_whitespace",
    "numbered_lines",
    "open_for_read",
    "read_puzzle_text",
    "split_csv_ints",
    "LOGGING",
    "build_logging_config",
    "AocError",
    "CircuitEvaluationError",
    "ExecutionError",
    "GeneratorError",
    "NoConsistentSwapError",
    "PuzzleParseError",
    "RecursionCycleError",
    "SolverBudgetError",
    "UnsupportedShapeError",
    "UsageError",
    ]
