"""Load, validate, and calendar-align daily price/index series from CSV, and
compute log returns.

Calendar gaps (weekends, holidays) are consecutive observations; alignment
drops dates missing from either series rather than forward-filling, which
would inject zero returns and bias volatility downward.
"""

import csv
import math
import os
from dataclasses import dataclass, field
from datetime import date, datetime
from typing import Optional, Tuple

import numpy as np

from volasym.errors import (
    DuplicateDateError,
    EmptyIntersectionError,
    IngestError,
    MissingInputError,
    NonPositiveCloseError,
    RowParseError,
    SeriesTooShortError,
)


@dataclass(frozen=True)
class CsvSchema:
    """Column mapping for vendor CSVs. date_format=None means ISO-8601."""
    date_column: str = "date"
    close_column: str = "close"
    delimiter: str = ","
    date_format: Optional[str] = None

    def parse_date(self, text: str) -> date:
        if self.date_format is None:
            return date.fromisoformat(text.strip())
        return datetime.strptime(text.strip(), self.date_format).date()


def _freeze(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class PriceSeries:
    """Date-indexed daily closes; dates strictly increasing, closes > 0."""
    name: str
    dates: Tuple[date, ...]
    closes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(self.dates) != len(self.closes):
            raise IngestError("dates and closes length mismatch")
        object.__setattr__(self, "closes", _freeze(self.closes))
        for i in range(1, len(self.dates)):
            if self.dates[i] <= self.dates[i - 1]:
                raise DuplicateDateError(
                    f"{self.name}: dates not strictly increasing at {self.dates[i]}")
        for i, c in enumerate(self.closes):
            if not math.isfinite(c) or c <= 0.0:
                raise NonPositiveCloseError(
                    f"{self.name}: non-positive close {c} on {self.dates[i]}")

    def __len__(self) -> int:
        return len(self.dates)

    def restrict(self, start: Optional[date] = None, end: Optional[date] = None) -> "PriceSeries":
        """Subseries with start <= date <= end."""
        keep = [i for i, d in enumerate(self.dates)
                if (start is None or d >= start) and (end is None or d <= end)]
        return PriceSeries(self.name, tuple(self.dates[i] for i in keep),
                           self.closes[keep])


@dataclass(frozen=True)
class ReturnSeries:
    """Daily log returns, each dated by the later of the two close dates."""
    name: str
    dates: Tuple[date, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(self.dates) != len(self.values):
            raise IngestError("dates and values length mismatch")
        object.__setattr__(self, "values", _freeze(self.values))

    def __len__(self) -> int:
        return len(self.values)


def load_csv(path, schema: CsvSchema = CsvSchema(), name: Optional[str] = None) -> PriceSeries:
    """Read a close-price CSV into a PriceSeries, sorted ascending by date.

    Any malformed row fails the load with its 1-based line number; duplicate
    dates and non-positive closes are rejected.
    """
    if not os.path.exists(path):
        raise MissingInputError(f"input file not found: {path}")
    label = name if name is not None else os.path.splitext(os.path.basename(path))[0]
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh, delimiter=schema.delimiter)
        if reader.fieldnames is None:
            raise RowParseError(f"{path}: empty file")
        missing = {schema.date_column, schema.close_column} - set(reader.fieldnames)
        if missing:
            raise RowParseError(
                f"{path}: header missing column(s) {sorted(missing)} "
                f"(got {reader.fieldnames})")
        for lineno, row in enumerate(reader, start=2):
            raw_date = row.get(schema.date_column)
            raw_close = row.get(schema.close_column)
            if raw_date is None or raw_close is None:
                raise RowParseError(f"{path}: line {lineno}: short row")
            try:
                d = schema.parse_date(raw_date)
            except ValueError as exc:
                raise RowParseError(
                    f"{path}: line {lineno}: bad date {raw_date!r}: {exc}") from exc
            try:
                close = float(raw_close)
            except ValueError as exc:
                raise RowParseError(
                    f"{path}: line {lineno}: bad close {raw_close!r}") from exc
            if not math.isfinite(close) or close <= 0.0:
                raise NonPositiveCloseError(
                    f"{path}: line {lineno}: non-positive close {raw_close!r}")
            rows.append((d, close, lineno))
    rows.sort(key=lambda r: (r[0], r[2]))
    for i in range(1, len(rows)):
        if rows[i][0] == rows[i - 1][0]:
            raise DuplicateDateError(
                f"{path}: duplicate date {rows[i][0]} (lines {rows[i - 1][2]} and {rows[i][2]})")
    return PriceSeries(label, tuple(r[0] for r in rows),
                       np.array([r[1] for r in rows]))


def write_csv(series: PriceSeries, path, schema: CsvSchema = CsvSchema()) -> None:
    """Deterministic fixture writer; load_csv(write_csv(s)) reproduces s exactly."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=schema.delimiter, lineterminator="\n")
        writer.writerow([schema.date_column, schema.close_column])
        for d, c in zip(series.dates, series.closes):
            writer.writerow([d.isoformat(), repr(float(c))])


def align(a: PriceSeries, b: PriceSeries) -> Tuple[PriceSeries, PriceSeries]:
    """Restrict both series to their common dates (same order, same length)."""
    if len(a) == 0 or len(b) == 0:
        raise EmptyIntersectionError("cannot align an empty series")
    common = set(a.dates) & set(b.dates)
    if not common:
        raise EmptyIntersectionError(
            f"no common dates between {a.name} and {b.name}")
    ia = [i for i, d in enumerate(a.dates) if d in common]
    ib = [i for i, d in enumerate(b.dates) if d in common]
    return (PriceSeries(a.name, tuple(a.dates[i] for i in ia), a.closes[ia]),
            PriceSeries(b.name, tuple(b.dates[i] for i in ib), b.closes[ib]))


def log_returns(p: PriceSeries) -> ReturnSeries:
    """r_k = ln(close_k / close_{k-1}), dated by the later day."""
    if len(p) < 2:
        raise SeriesTooShortError(f"{p.name}: need at least 2 closes for returns")
    values = np.log(p.closes[1:] / p.closes[:-1])
    return ReturnSeries(p.name, tuple(p.dates[1:]), values)
