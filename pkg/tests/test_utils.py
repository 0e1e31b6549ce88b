import json
from fractions import Fraction

import pytest
from seqconv.exactmath import Polynomial
from seqconv.exactmath import QuadExt
from seqconv.exceptions import RangeSyntaxError
from seqconv.identities import CheckResult
from seqconv.identities import Status
from seqconv.utils import FIELDS
from seqconv.utils import cell_record
from seqconv.utils import format_scalar
from seqconv.utils import header_line
from seqconv.utils import parse_range
from seqconv.utils import render


def test_format_scalar():
    assert format_scalar(Fraction(6, 3)) == "2"
    assert format_scalar(Fraction(-3, 124)) == "-3/124"
    assert format_scalar(7) == "7"
    assert format_scalar(Polynomial([Fraction(1, 2), 0, -3])) == ["1/2", "0", "-3"]
    assert format_scalar(QuadExt(1, 2, 5)) == "1 + 2*sqrt(5)"
    assert format_scalar(None) is None


@pytest.mark.parametrize(
    "text, expected",
    [("1..4", range(1, 5)), ("-4..6", range(-4, 7)), ("3", range(3, 4)), (" 0 .. 20 ", range(0, 21))],
)
def test_parse_range(text, expected):
    assert parse_range(text) == expected


@pytest.mark.parametrize("text", ["", "1..", "a..b", "4..1", "1...3", "1,3"])
def test_parse_range_rejects(text):
    with pytest.raises(RangeSyntaxError):
        parse_range(text)


def _records():
    return [
        cell_record(CheckResult("eq3_lucas_fib", 1, 2, Status.PASS, Fraction(3), Fraction(3))),
        cell_record(CheckResult("cheb_tu_printed", 1, 0, Status.FAIL, Polynomial([1]), Polynomial([Fraction(1, 2)]))),
        cell_record(CheckResult("eq1_fib_self", 2, 0, Status.SKIPPED, reason="fixed stride; checked at r = 1 only")),
    ]


def test_cell_record_schema():
    record = _records()[1]
    assert tuple(record) == FIELDS
    assert record["status"] == "fail"
    assert record["rhs"] == ["1/2"]


def test_render_json_one_record_per_line():
    lines = render(_records(), "json").splitlines()
    assert len(lines) == 3
    first = json.loads(lines[0])
    assert first == {"identity": "eq3_lucas_fib", "r": 1, "n": 2, "status": "pass", "lhs": "3", "rhs": "3", "reason": None}


def test_render_csv_and_table_hold_the_same_cells():
    csv_lines = render(_records(), "csv").splitlines()
    table_lines = render(_records(), "table").splitlines()
    assert csv_lines[0] == ",".join(FIELDS)
    assert len(csv_lines) == len(table_lines) == 4
    assert "[1/2]" in csv_lines[2]
    assert table_lines[3].startswith("eq1_fib_self")
    assert table_lines[3].endswith("fixed stride; checked at r = 1 only")


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render(_records(), "xml")


def test_header_line():
    assert header_line().startswith("# seqconv ")
