import csv
import io
import json
import logging
import re
from collections import OrderedDict
from datetime import datetime
from fractions import Fraction
from typing import Iterable
from typing import List
from typing import Union

from tzlocal import get_localzone

from seqconv import __version__
from seqconv.exactmath import Polynomial
from seqconv.exactmath import QuadExt
from seqconv.exceptions import RangeSyntaxError
from seqconv.identities import CheckResult
from seqconv.identities import SweepReport

logger = logging.getLogger(__name__)

FIELDS = ("identity", "r", "n", "status", "lhs", "rhs", "reason")
FORMATS = ("table", "json", "csv")

_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


def format_rational(value) -> str:
    """``"p/q"``, or ``"p"`` when q is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def format_scalar(value) -> Union[None, str, List[str]]:
    """
    Serialize an exact value: rationals as strings, polynomials as the list of
    their coefficients (lowest degree first), quadratic-field elements as
    ``"a + b*sqrt(d)"``.
    """
    if value is None:
        return None
    if isinstance(value, Polynomial):
        return [format_rational(c) for c in value.coefficients]
    if isinstance(value, QuadExt):
        if value.b == 0:
            return format_rational(value.a)
        return str(value)
    return format_rational(value)


def cell_record(result: CheckResult) -> "OrderedDict[str, object]":
    return OrderedDict(
        [
            ("identity", result.identity),
            ("r", result.r),
            ("n", result.n),
            ("status", result.status.value),
            ("lhs", format_scalar(result.lhs)),
            ("rhs", format_scalar(result.rhs)),
            ("reason", result.reason),
        ]
    )


def _flat(value) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return "[" + ", ".join(value) + "]"
    return str(value)


def render_json(records: Iterable[dict]) -> str:
    return "".join(json.dumps(record, ensure_ascii=False) + "\n" for record in records)


def render_csv(records: Iterable[dict], header: bool = True) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if header:
        writer.writerow(FIELDS)
    for record in records:
        writer.writerow([_flat(record[name]) for name in FIELDS])
    return buffer.getvalue()


def render_table(records: Iterable[dict], header: bool = True) -> str:
    rows = [[_flat(record[name]) for name in FIELDS] for record in records]
    if header:
        rows.insert(0, list(FIELDS))
    if not rows:
        return ""
    # the last column is free text and is not padded
    widths = [max(len(row[i]) for row in rows) for i in range(len(FIELDS) - 1)]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)] + [row[-1]]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render(records: List[dict], fmt: str, header: bool = True) -> str:
    if fmt == "json":
        return render_json(records)
    if fmt == "csv":
        return render_csv(records, header)
    if fmt == "table":
        return render_table(records, header)
    raise ValueError("unknown format %r, expected one of %s" % (fmt, ", ".join(FORMATS)))


def summary_lines(report: SweepReport) -> List[str]:
    """Per-identity tallies followed by the minimal counterexample of every failing (identity, r)."""
    lines = ["# summary"]
    for identity, tally in report.tallies.items():
        lines.append("# %s pass=%d fail=%d skipped=%d" % (identity, tally.passed, tally.failed, tally.skipped))
    total = report.total
    lines.append("# total pass=%d fail=%d skipped=%d" % (total.passed, total.failed, total.skipped))
    for result in report.failures:
        lines.append(
            "# counterexample %s r=%d n=%d lhs=%s rhs=%s"
            % (result.identity, result.r, result.n, _flat(format_scalar(result.lhs)), _flat(format_scalar(result.rhs)))
        )
    if report.stopped_early:
        lines.append("# stopped at the first failing cell")
    return lines


def header_line() -> str:
    now = datetime.now(get_localzone())
    return "# seqconv %s %s" % (__version__, now.isoformat(timespec="seconds"))


def parse_range(text: str) -> range:
    """
    Parse an inclusive integer range ``"a..b"`` (or a single integer ``"a"``).
    Negative bounds are allowed.

    :raises RangeSyntaxError: if the text is malformed or a > b
    """
    match = _RANGE.match(str(text))
    if match is None:
        raise RangeSyntaxError(text, "expected a..b with integer bounds")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) is not None else low
    if low > high:
        raise RangeSyntaxError(text, "lower bound exceeds upper bound")
    return range(low, high + 1)
