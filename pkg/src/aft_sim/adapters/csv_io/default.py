"""CSV input and output.

Purpose
-------
Load paired samples for qualification, and render decisions and sweep rows
as byte-stable CSV: fixed column order, ``\\n`` line endings, reals with 17
significant digits.

Contents
    - ``DECISION_COLUMNS``: per-request table header.
    - ``load_samples_csv`` / ``parse_samples_csv``: two-column sample files.
    - ``render_decisions_csv`` / ``CsvDecisionSink``: one row per request.
    - ``render_sweep_csv``: one row per swept value.
    - ``format_cell``: canonical rendering of a single value.
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Iterable, NoReturn, Sequence

from ...domain.artira import PairedSamples
from ...domain.errors import InvalidFormat, NotFound, ParseError
from ...domain.metric import Value, ValueKind, kind_of
from ...domain.quorum import Decision
from ...domain.scenario import Metrics
from ...observability import log_debug, log_error
from ..scenario_file.default import parse_value

__all__ = [
    "DECISION_COLUMNS",
    "SWEEP_METRIC_COLUMNS",
    "format_cell",
    "parse_samples_csv",
    "load_samples_csv",
    "render_decisions_csv",
    "render_sweep_csv",
    "CsvDecisionSink",
]

DECISION_COLUMNS: tuple[str, ...] = (
    "request_index",
    "kind",
    "committed",
    "learned_value",
    "reference_value",
    "abs_error",
    "match_size",
    "aggregate_alpha",
    "messages",
)

SWEEP_METRIC_COLUMNS: tuple[str, ...] = (
    "requests",
    "committed",
    "commit_rate",
    "mean_abs_error",
    "max_abs_error",
    "messages_sent",
    "messages_delivered",
    "messages_dropped",
    "replication_factor",
    "detection_precision",
    "detection_recall",
)


def format_cell(value: Value | None) -> str:
    """Render one cell; ``None`` is empty and reals use 17 significant digits.

    Examples
    --------
    >>> format_cell(0.1), format_cell(3), format_cell(True), format_cell(None)
    ('0.10000000000000001', '3', 'true', '')
    >>> format_cell((1.5, -2.0))
    '(1.5 -2)'
    """

    if value is None:
        return ""
    kind = kind_of(value)
    if kind is ValueKind.BOOLEAN:
        return "true" if value else "false"
    if kind is ValueKind.INTEGER:
        return str(value)
    if kind is ValueKind.REAL:
        return _real(float(value))  # type: ignore[arg-type]
    if kind is ValueKind.VECTOR:
        return "(" + " ".join(_real(float(x)) for x in value) + ")"  # type: ignore[union-attr]
    return str(value)


def parse_samples_csv(text: str, *, source: str | None = None) -> PairedSamples:
    """Parse ``x,y`` rows into paired samples.

    The first non-blank row is a header naming the columns and may not hold
    a number. Every row, header included, must hold exactly two cells.

    Examples
    --------
    >>> parse_samples_csv("fahrenheit,celsius\\n212,100\\n32,0\\n").pairs
    ((212, 100), (32, 0))
    >>> parse_samples_csv("212,100\\n32,0\\n")
    Traceback (most recent call last):
    ...
    aft_sim.domain.errors.ParseError: line 1, column 1: expected a header row naming the two columns, got '212,100'
    """

    rows = list(csv.reader(io.StringIO(text)))
    pairs: list[tuple[Value, Value]] = []
    header_seen = False
    for line_no, row in enumerate(rows, start=1):
        cells = [cell.strip() for cell in row]
        if not any(cells):
            continue
        if len(cells) != 2:
            _reject(ParseError(f"expected 2 columns, got {len(cells)}", line=line_no, column=1), source)
        if not header_seen:
            if not _is_header(cells):
                reason = f"expected a header row naming the two columns, got {','.join(cells)!r}"
                _reject(ParseError(reason, line=line_no, column=1), source)
            header_seen = True
            continue
        pairs.append((parse_value(cells[0], line=line_no, column=1), parse_value(cells[1], line=line_no, column=2)))
    samples = PairedSamples.of(pairs)
    log_debug("samples_loaded", source=source, count=samples.count)
    return samples


def load_samples_csv(path: str | Path) -> PairedSamples:
    """Read and parse the sample file at *path*."""

    file_path = Path(path)
    if not file_path.is_file():
        raise NotFound(f"sample file not found: {file_path}")
    try:
        text = file_path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidFormat(f"sample file {file_path} is not UTF-8: {exc}") from exc
    return parse_samples_csv(text, source=str(file_path))


def render_decisions_csv(decisions: Iterable[Decision]) -> str:
    """Return the per-request table.

    Examples
    --------
    >>> from aft_sim.domain.quorum import RequestKind
    >>> print(render_decisions_csv([Decision(0, RequestKind.WRITE, False, None, message_count=1)]), end="")
    request_index,kind,committed,learned_value,reference_value,abs_error,match_size,aggregate_alpha,messages
    0,write,false,,,,0,,1
    """

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(DECISION_COLUMNS)
    for decision in decisions:
        writer.writerow(
            [
                decision.request_index,
                decision.kind.value,
                format_cell(decision.committed),
                format_cell(decision.learned),
                format_cell(decision.reference),
                format_cell(decision.abs_error),
                decision.match_size,
                format_cell(decision.aggregate_alpha),
                decision.message_count,
            ]
        )
    return buffer.getvalue()


def render_sweep_csv(axis: str, rows: Sequence[tuple[float | int, Metrics]]) -> str:
    """Return one row per swept value; the first column is named after *axis*."""

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow((axis, *SWEEP_METRIC_COLUMNS))
    for value, metrics in rows:
        writer.writerow([format_cell(value), *(format_cell(getattr(metrics, column)) for column in SWEEP_METRIC_COLUMNS)])
    return buffer.getvalue()


class CsvDecisionSink:
    """``DecisionSink`` writing the per-request table to *path*."""

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)

    def write(self, decisions: Sequence[Decision]) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(render_decisions_csv(decisions))
        log_debug("decisions_written", path=str(self.path), rows=len(decisions))


def _real(value: float) -> str:
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return format(value, ".17g")


def _is_header(cells: list[str]) -> bool:
    return not any(_looks_numeric(cell) for cell in cells)


def _looks_numeric(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _reject(error: ParseError, source: str | None) -> NoReturn:
    log_error("samples_invalid", source=source, line=error.line, error=error.reason)
    raise error
