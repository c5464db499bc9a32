# aoc_helper/utilities/errors.py
"""
Exception hierarchy shared by every layer of the toolkit.

Parse and usage failures subclass ``ValueError`` so callers written against
``IParserEmitter`` keep catching ``ValueError``. Infeasible or unreachable
outcomes are *not* errors; solvers return ``None`` for those.
"""

from __future__ import annotations

from typing import Optional


class AocError(Exception):
    """Base class for all toolkit errors."""


class UsageError(AocError, ValueError):
    """An argument, flag combination or precondition was violated by the caller."""


class UnsupportedShapeError(UsageError):
    """The input is well formed but outside the family a solver supports."""


class PuzzleParseError(AocError, ValueError):
    """
    Malformed puzzle text.

    Attributes
    ----------
    line_number : int | None
        1-based line of the offending input, when known.
    source : str | None
        The offending line, stripped.
    """

    def __init__(
        self,
        message: str,
        line_number: Optional[int] = None,
        source: Optional[str] = None,
    ) -> None:
        self.message = message
        self.line_number = line_number
        self.source = source
        super().__init__(self.__str__())

    def __str__(self) -> str:
        prefix = f"line {self.line_number}: " if self.line_number is not None else ""
        suffix = f" ({self.source!r})" if self.source else ""
        return f"{prefix}{self.message}{suffix}"


class ExecutionError(AocError, RuntimeError):
    """A machine or evaluator could not complete a run."""


class CircuitEvaluationError(ExecutionError):
    """A circuit could not be evaluated (undriven wire, cycle)."""


class RecursionCycleError(AocError, RuntimeError):
    """A memoized recursion re-entered a key that is still being derived."""


class NoConsistentSwapError(AocError):
    """No swap set of the requested size explains the training data."""


class GeneratorError(AocError, RuntimeError):
    """Instance generation gave up after its retry budget."""


class SolverBudgetError(AocError, RuntimeError):
    """A solve stopped at its conflict budget without a verdict."""
