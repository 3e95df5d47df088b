"""Grouping every pattern of a given length by its exact waiting time.

Complementary patterns (heads and tails swapped) share a waiting time, so
by default only the canonical representatives starting with 1 are listed;
the 0-leading half of each length is implied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidLengthError
from .pattern import Pattern, expected_waiting_time

__all__ = ["TableRow", "waiting_time_table"]


@dataclass(frozen=True, slots=True)
class TableRow:
    """All patterns of one length sharing one exact average."""

    length: int
    average: int
    patterns: tuple[str, ...]


def _int_to_pattern(value: int, length: int) -> Pattern:
    return Pattern(tuple((value >> (length - 1 - i)) & 1 for i in range(length)))


def waiting_time_table(
    lengths: Iterable[int], *, include_complements: bool = False
) -> list[TableRow]:
    """Build rows grouping patterns by exact expected waiting time.

    For each length the canonical patterns (leading bit 1, or all 2**L of
    them with include_complements) are grouped by their average; rows come
    out sorted by length then ascending average, patterns within a row
    ascending as binary numbers.
    """
    rows: list[TableRow] = []
    for length in lengths:
        if length < 1:
            raise InvalidLengthError(f"pattern length must be >= 1, got {length}")
        groups: dict[int, list[str]] = {}
        start = 0 if include_complements else 1 << (length - 1)
        for value in range(start, 1 << length):
            p = _int_to_pattern(value, length)
            groups.setdefault(expected_waiting_time(p), []).append(str(p))
        for average in sorted(groups):
            # Enumeration order is already ascending as binary numbers.
            rows.append(TableRow(length, average, tuple(groups[average])))
    return rows
