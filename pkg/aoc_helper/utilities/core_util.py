#!/usr/bin/env python3
"""
Core Utilities

Features:
- File I/O helpers
- String and line utilities shared by the parsers
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Optional, Union

#region Common functions

def is_null_or_whitespace(s: Optional[str]) -> bool:
    """Check if a string is None, empty, or consists only of whitespace."""
    return s is None or s.strip() == ""

def open_for_read(path: Union[str, Path], binary: bool = False, **kwargs):
    mode = "rb" if binary else "r"
    return open(path, mode, **kwargs)

def read_puzzle_text(path: Union[str, Path]) -> str:
    """Read a whole puzzle input as UTF-8 text."""
    with open_for_read(Path(path), encoding="utf-8") as f:
        return f.read()

#endregion Common functions

#region Line helpers

def numbered_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, line)`` pairs, 1-based, without line terminators."""
    for number, line in enumerate(text.splitlines(), start=1):
        yield number, line

def split_csv_ints(raw: str) -> list[int]:
    """Parse ``"1, 2,3"`` into ``[1, 2, 3]``; raises ValueError on junk."""
    return [int(part) for part in raw.split(",") if part.strip() != ""]

#endregion Line helpers
