# aoc_helper/data_model/interfaces/i_parser_emitter.py
"""
Generic, runtime-checkable protocol for text <-> object converters.

Each puzzle format (DIMACS, edge lists, device listings, circuits, mazes,
door codes) is handled by one class with a ``parse`` that turns the whole
document into a typed object and an ``emit`` that writes it back.

### Expectations for implementers

- **Determinism:** the same text parses to equal objects, and the same object
  emits byte-identical text.
- **Round trips:** ``parse(emit(x)) == x`` wherever the format can express
  ``x``. Emitters write ``\\n`` line endings and a trailing newline.
- **Errors:** malformed input raises ``PuzzleParseError`` (a ``ValueError``)
  carrying the 1-based line number of the first offending line.
- **Purity:** neither operation mutates its argument.
"""

from __future__ import annotations

from typing import Protocol, TypeVar, runtime_checkable

from .enum_puzzle_file_types import PuzzleFileType

T = TypeVar("T")


@runtime_checkable
class IParserEmitter(Protocol[T]):
    """
    Paired parser/emitter for a single puzzle text format.

    Attributes
    ----------
    file_format : PuzzleFileType
        Constant identifier of the handled format; used for dispatch and
        in log messages.
    """

    file_format: PuzzleFileType

    def parse(self, unparsed_string: str) -> T:
        """
        Parse a complete document.

        Parameters
        ----------
        unparsed_string : str
            Full document text. ``\\n``, ``\\r\\n`` and ``\\r`` line endings are
            equivalent.

        Returns
        -------
        T
            The parsed domain object.

        Raises
        ------
        PuzzleParseError
            Malformed content, with line context.
        """
        ...

    def emit(self, item: T) -> str:
        """
        Serialize ``item`` into canonical text.

        Raises
        ------
        ValueError
            If the item cannot be represented in the format.
        """
        ...
