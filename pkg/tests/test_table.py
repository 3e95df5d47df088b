"""Grouping of patterns by average, including the classic 2..6 table."""

import pytest

from coinwait import (
    InvalidLengthError,
    complement,
    expected_waiting_time,
    parse_pattern,
    waiting_time_table,
)

# Every canonical pattern of lengths 2..6 with its exact average.  This is
# the classic reference table for the fair-coin waiting-time problem and is
# frozen here; any regrouping is a regression.
REFERENCE_TABLE = {
    2: {
        4: ["10"],
        6: ["11"],
    },
    3: {
        8: ["100", "110"],
        10: ["101"],
        14: ["111"],
    },
    4: {
        16: ["1000", "1100", "1110"],
        18: ["1001", "1011", "1101"],
        20: ["1010"],
        30: ["1111"],
    },
    5: {
        32: ["10000", "10100", "11000", "11010", "11100", "11110"],
        34: ["10001", "10011", "10111", "11001", "11101"],
        36: ["10010", "10110"],
        38: ["11011"],
        42: ["10101"],
        62: ["11111"],
    },
    6: {
        64: ["100000", "101000", "101100", "110000", "110010",
             "110100", "111000", "111010", "111100", "111110"],
        66: ["100001", "100011", "100101", "100111", "101001", "101011",
             "101111", "110001", "110101", "111001", "111101"],
        68: ["100010", "100110", "101110"],
        70: ["110011", "110111", "111011"],
        72: ["100100", "110110"],
        74: ["101101"],
        84: ["101010"],
        126: ["111111"],
    },
}


def test_reference_table_is_reproduced_exactly():
    rows = waiting_time_table(range(2, 7))
    got = {}
    for row in rows:
        got.setdefault(row.length, {})[row.average] = sorted(row.patterns)
    want = {
        length: {avg: sorted(ps) for avg, ps in groups.items()}
        for length, groups in REFERENCE_TABLE.items()
    }
    assert got == want


def test_reference_table_row_count_and_pattern_total():
    rows = waiting_time_table(range(2, 7))
    assert sum(len(r.patterns) for r in rows) == 62
    sixes = [r for r in rows if r.length == 6]
    assert [len(r.patterns) for r in sixes] == [10, 11, 3, 3, 2, 1, 1, 1]
    assert [r.average for r in sixes] == [64, 66, 68, 70, 72, 74, 84, 126]


def test_rows_are_sorted_and_patterns_ascend():
    rows = waiting_time_table([4])
    assert [r.average for r in rows] == sorted(r.average for r in rows)
    for row in rows:
        assert list(row.patterns) == sorted(row.patterns)


def test_averages_match_direct_computation():
    for row in waiting_time_table([5]):
        for text in row.patterns:
            assert expected_waiting_time(parse_pattern(text)) == row.average


def test_full_table_covers_complements():
    rows = waiting_time_table([4], include_complements=True)
    patterns = [p for row in rows for p in row.patterns]
    assert len(patterns) == 16
    averages = {}
    for row in rows:
        for p in row.patterns:
            averages[p] = row.average
    for text, avg in averages.items():
        assert averages[str(complement(parse_pattern(text)))] == avg


def test_canonical_table_only_lists_leading_ones():
    for row in waiting_time_table(range(2, 7)):
        assert all(p.startswith("1") for p in row.patterns)


def test_rejects_degenerate_length():
    with pytest.raises(InvalidLengthError):
        waiting_time_table([0])


def test_single_toss_table():
    rows = waiting_time_table([1])
    assert len(rows) == 1
    assert rows[0].average == 2
    assert rows[0].patterns == ("1",)
