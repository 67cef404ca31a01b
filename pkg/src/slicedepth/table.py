"""Rolfsen-table survey of 2-bridge knots.

Input CSV columns: ``name,crossings,p,q,even_cf`` plus an optional
``determinant`` column that is cross-checked against ``|p|``.  Lines
starting with ``#`` are comments.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import IO

from .classify import SliceDepthVerdict, analyze_two_bridge
from .errors import InvariantViolation, ParseError, SliceDepthError
from .rational import EvenCF, eval_cf, two_bridge_representatives

__all__ = [
    "KnotRecord",
    "SurveyReport",
    "SurveyRow",
    "emit_report",
    "load_bundled_table",
    "load_table",
    "run_survey",
    "EXPECTED_TWO_BRIDGE_COUNT",
]

logger = logging.getLogger(__name__)

REQUIRED_COLUMNS = ("name", "crossings", "p", "q")
OPTIONAL_COLUMNS = ("even_cf", "determinant")
BUNDLED_TABLE = "rolfsen_two_bridge.csv"
MAX_CROSSINGS = 10
# 2-bridge knots with at most 10 crossings in the Rolfsen table.
EXPECTED_TWO_BRIDGE_COUNT = 95
SURVEY_TWIST = 2


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossings: int
    fraction: Fraction
    even_cf: EvenCF | None = None
    # True when even_cf evaluates to another presentation of the knot, not to fraction itself.
    alternate_representative: bool = False

    @property
    def determinant(self) -> int:
        return abs(self.fraction.numerator)

    @property
    def sort_key(self) -> tuple:
        return knot_sort_key(self.name, self.crossings)


def knot_sort_key(name: str, crossings: int) -> tuple:
    """Order ``10_2`` before ``10_10``."""
    parts = re.split(r"(\d+)", name)
    return (crossings, [int(s) if s.isdigit() else s for s in parts])


def _read_text(source: IO[bytes] | IO[str] | bytes | str) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _int_field(row: dict, column: str, line: int) -> int:
    raw = (row.get(column) or "").strip()
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"expected an integer, got {raw!r}", line, column) from None


def _parse_cf(raw: str, line: int) -> EvenCF:
    try:
        return EvenCF(int(part) for part in raw.split(";"))
    except ValueError as exc:
        raise ParseError(f"bad even_cf {raw!r}: {exc}", line, "even_cf") from None


def _record(row: dict, line: int) -> KnotRecord:
    name = (row.get("name") or "").strip()
    if not name:
        raise ParseError("empty knot name", line, "name")
    crossings = _int_field(row, "crossings", line)
    p = _int_field(row, "p", line)
    q = _int_field(row, "q", line)
    if not 0 < crossings <= MAX_CROSSINGS:
        raise InvariantViolation(f"crossing number {crossings} outside 1..{MAX_CROSSINGS}", line, "crossings")
    if q == 0:
        raise InvariantViolation("q must be nonzero", line, "q")
    fraction = Fraction(p, q)
    if fraction.numerator != p * (1 if q > 0 else -1):
        raise InvariantViolation(f"{p}/{q} is not reduced", line, "q")
    if p % 2 == 0:
        raise InvariantViolation(f"p = {p} must be odd for a 2-bridge knot", line, "p")

    raw_det = (row.get("determinant") or "").strip()
    if raw_det:
        det = _int_field(row, "determinant", line)
        if det != abs(p):
            raise InvariantViolation(f"determinant {det} != |p| = {abs(p)}", line, "determinant")

    cf = None
    alternate = False
    raw_cf = (row.get("even_cf") or "").strip()
    if raw_cf:
        cf = _parse_cf(raw_cf, line)
        try:
            value = eval_cf(cf.coefficients)
        except SliceDepthError as exc:
            raise InvariantViolation(f"even_cf {raw_cf!r}: {exc}", line, "even_cf") from None
        if value != fraction:
            same_knot = abs(value.numerator) == abs(p) and any(
                rep.denominator == value.denominator for rep in two_bridge_representatives(fraction)
            )
            if not same_knot:
                raise InvariantViolation(
                    f"even_cf evaluates to {value}, not a presentation of {fraction}", line, "even_cf"
                )
            alternate = True
    return KnotRecord(name, crossings, fraction, cf, alternate)


def load_table(source: IO[bytes] | IO[str] | bytes | str) -> list[KnotRecord]:
    """Parse and validate a knot table.  ``str`` input is CSV text, not a path."""
    text = _read_text(source)
    numbered = [
        (n, line) for n, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not numbered:
        raise ParseError("no header row")
    header_line, header = numbered[0]
    columns = next(csv.reader([header]))
    columns = [c.strip() for c in columns]
    missing = [c for c in REQUIRED_COLUMNS if c not in columns]
    if missing:
        raise ParseError(f"header lacks columns {missing}", header_line)
    unknown = [c for c in columns if c not in REQUIRED_COLUMNS + OPTIONAL_COLUMNS]
    if unknown:
        raise ParseError(f"unknown columns {unknown}", header_line)

    records = []
    names = set()
    for line, values in zip(
        (n for n, _ in numbered[1:]), csv.reader(line for _, line in numbered[1:])
    ):
        if len(values) > len(columns):
            raise ParseError(f"{len(values)} fields, header has {len(columns)}", line)
        row = dict(zip(columns, values))
        record = _record(row, line)
        if record.name in names:
            raise InvariantViolation(f"duplicate knot {record.name}", line, "name")
        names.add(record.name)
        records.append(record)
    return records


def load_bundled_table() -> list[KnotRecord]:
    data = resources.files("slicedepth").joinpath("data", BUNDLED_TABLE).read_bytes()
    records = load_table(data)
    check_table_size(records)
    return records


def check_table_size(records: Sequence[KnotRecord]) -> bool:
    """Soft check that the table holds all 95 two-bridge knots up to 10 crossings."""
    n = sum(1 for r in records if r.crossings <= MAX_CROSSINGS)
    if n != EXPECTED_TWO_BRIDGE_COUNT:
        logger.warning(
            "table has %d two-bridge knots with <= %d crossings, expected %d",
            n, MAX_CROSSINGS, EXPECTED_TWO_BRIDGE_COUNT,
        )
        return False
    return True


@dataclass(frozen=True)
class SurveyRow:
    name: str
    crossings: int
    p: int
    q: int
    word: str | None
    accepted: bool
    verdict: SliceDepthVerdict | None
    error: str | None = None

    def to_dict(self) -> dict:
        v = self.verdict
        return {
            "name": self.name,
            "crossings": self.crossings,
            "p": self.p,
            "q": self.q,
            "word": self.word,
            "accepted": self.accepted,
            "lower": v.lower if v else None,
            "upper": v.upper if v else None,
            "exact": v.exact if v else False,
        }


@dataclass(frozen=True)
class SurveyReport:
    rows: tuple[SurveyRow, ...]

    @property
    def qualifying(self) -> list[str]:
        return [r.name for r in self.rows if r.accepted]

    @property
    def count(self) -> int:
        return len(self.qualifying)

    @property
    def errors(self) -> list[SurveyRow]:
        return [r for r in self.rows if r.error is not None]


def _survey_row(record: KnotRecord) -> SurveyRow:
    p, q = record.fraction.numerator, record.fraction.denominator
    try:
        knot = record.even_cf if record.even_cf is not None else record.fraction
        analysis = analyze_two_bridge(knot, SURVEY_TWIST)
    except SliceDepthError as exc:
        return SurveyRow(record.name, record.crossings, p, q, None, False, None, str(exc))
    return SurveyRow(
        record.name, record.crossings, p, q,
        analysis.chosen.word, analysis.accepted, analysis.verdict,
    )


def run_survey(records: Iterable[KnotRecord]) -> SurveyReport:
    """Word test plus 2-twist verdict for every record.

    A record that fails is kept as an errored row; the rest still run.
    Rows come out sorted by crossing number then knot index, whatever
    the input order.
    """
    records = sorted(records, key=lambda r: r.sort_key)
    return SurveyReport(tuple(_survey_row(r) for r in records))


TEXT_COLUMNS = ("name", "crossings", "p/q", "word", "accepted", "lower", "upper", "exact")


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _emit_text(report: SurveyReport) -> str:
    table = [TEXT_COLUMNS]
    for r in report.rows:
        d = r.to_dict()
        word = "ERROR" if r.error else (repr(r.word) if r.word == "" else r.word)
        table.append((
            r.name, str(r.crossings), f"{r.p}/{r.q}", word, _fmt(r.accepted),
            _fmt(d["lower"]), _fmt(d["upper"]), _fmt(d["exact"]),
        ))
    widths = [max(len(row[i]) for row in table) for i in range(len(TEXT_COLUMNS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    lines.append("")
    lines.append(f"{report.count} knots satisfy the word condition: {', '.join(report.qualifying)}")
    for r in report.errors:
        lines.append(f"error in {r.name}: {r.error}")
    return "\n".join(lines) + "\n"


def _emit_json(report: SurveyReport) -> str:
    payload = {
        "count": report.count,
        "qualifying": report.qualifying,
        "rows": [r.to_dict() for r in report.rows],
    }
    if report.errors:
        payload["errors"] = [{"name": r.name, "message": r.error} for r in report.errors]
    return json.dumps(payload, indent=2) + "\n"


def _emit_csv(report: SurveyReport) -> str:
    out = io.StringIO()
    fields = ["name", "crossings", "p", "q", "word", "accepted", "lower", "upper", "exact"]
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in report.rows:
        d = r.to_dict()
        for key in ("accepted", "exact"):
            d[key] = "true" if d[key] else "false"
        writer.writerow({k: "" if v is None else v for k, v in d.items()})
    return out.getvalue()


FORMATS = {"text": _emit_text, "json": _emit_json, "csv": _emit_csv}


def emit_report(report: SurveyReport, format: str = "text") -> bytes:
    try:
        emit = FORMATS[format]
    except KeyError:
        raise ValueError(f"unknown format {format!r}; choose from {sorted(FORMATS)}") from None
    return emit(report).encode("utf-8")
