# aoc_helper/data_model/parsers_emitters/dimacs_parser_emitter.py
"""
DIMACS CNF import/export.

Accepted input: optional ``c`` comment lines, exactly one ``p cnf <vars>
<clauses>`` header, then clauses as whitespace-separated signed integers each
terminated by ``0``. A clause may span lines.
"""

from __future__ import annotations

import logging
from typing import Optional

from aoc_helper.data_model.interfaces import IParserEmitter, PuzzleFileType
from aoc_helper.sat.cnf_instance import CnfInstance
from aoc_helper.utilities.core_util import numbered_lines
from aoc_helper.utilities.errors import PuzzleParseError

log = logging.getLogger(__name__)


class DimacsParserEmitter(IParserEmitter[CnfInstance]):
    """Parse DIMACS text into a ``CnfInstance`` and write one back."""

    file_format: PuzzleFileType = PuzzleFileType.DIMACS

    def parse(self, unparsed_string: str) -> CnfInstance:
        instance: Optional[CnfInstance] = None
        declared = 0
        count = 0
        pending: list[int] = []
        pending_line = 0
        for number, raw in numbered_lines(unparsed_string):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("p"):
                if instance is not None:
                    raise PuzzleParseError("duplicate problem header", number, line)
                instance, declared = self._parse_header(line, number)
                continue
            if instance is None:
                raise PuzzleParseError("clause before 'p cnf' header", number, line)
            for token in line.split():
                try:
                    lit = int(token)
                except ValueError:
                    raise PuzzleParseError(f"not an integer: {token!r}", number, line) from None
                if lit == 0:
                    instance.add_clause(pending)
                    count += 1
                    pending = []
                    continue
                if abs(lit) > instance.num_vars:
                    raise PuzzleParseError(
                        f"literal {lit} out of range 1..{instance.num_vars}", number, line
                    )
                if not pending:
                    pending_line = number
                pending.append(lit)
        if instance is None:
            raise PuzzleParseError("missing 'p cnf' header")
        if pending:
            raise PuzzleParseError("clause missing terminating 0", pending_line)
        if count != declared:
            raise PuzzleParseError(f"header declares {declared} clauses, body has {count}")
        log.debug("read DIMACS: %d vars, %d clauses", instance.num_vars, count)
        return instance

    def emit(self, item: CnfInstance) -> str:
        lines = [f"p cnf {item.num_vars} {len(item.clauses)}"]
        lines.extend(" ".join([*map(str, clause), "0"]) for clause in item.clauses)
        return "\n".join(lines) + "\n"

    # ------- internal parsing helpers -------

    @staticmethod
    def _parse_header(line: str, number: int) -> tuple[CnfInstance, int]:
        parts = line.split()
        if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
            raise PuzzleParseError("malformed header, expected 'p cnf <vars> <clauses>'", number, line)
        try:
            num_vars, num_clauses = int(parts[2]), int(parts[3])
        except ValueError:
            raise PuzzleParseError("header counts must be integers", number, line) from None
        if num_vars < 0 or num_clauses < 0:
            raise PuzzleParseError("header counts must be nonnegative", number, line)
        return CnfInstance(num_vars=num_vars), num_clauses


def read_dimacs(text: str) -> CnfInstance:
    """Parse DIMACS CNF text."""
    return DimacsParserEmitter().parse(text)


def write_dimacs(instance: CnfInstance) -> str:
    """Serialize ``instance``'s original clauses (learned clauses are not written)."""
    return DimacsParserEmitter().emit(instance)
