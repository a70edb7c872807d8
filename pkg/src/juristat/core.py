"""Shared series type, CSV ingestion, train/test splitting and the MSE metric."""

from __future__ import annotations

import csv
import datetime as dt
import io
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    EmptySeries,
    InvalidValue,
    LengthMismatch,
    MalformedRow,
    NonContiguous,
    TooShort,
    UnsupportedFrequency,
)

CSV_HEADER = ("yearMonth", "count")


@dataclass(frozen=True)
class TimeSeries:
    """Regularly spaced observations starting at ``(start_year, start_period)``.

    ``frequency`` is the number of periods per year (12 monthly, 1 yearly).
    """

    values: tuple[float, ...]
    start_year: int
    start_period: int = 1
    frequency: int = 1

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise EmptySeries("time series must contain at least one value")
        if not all(math.isfinite(v) for v in vals):
            raise InvalidValue("time series values must be finite")
        if int(self.frequency) != self.frequency or self.frequency < 1:
            raise InvalidValue(f"frequency must be a positive integer, got {self.frequency}")
        if not 1 <= self.start_period <= self.frequency:
            raise InvalidValue(
                f"start_period must lie in [1, {self.frequency}], got {self.start_period}"
            )

    def __len__(self) -> int:
        return len(self.values)

    @property
    def start(self) -> tuple[int, int]:
        return (self.start_year, self.start_period)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def epoch_at(self, i: int) -> tuple[int, int]:
        """(year, period) of observation ``i``; ``i`` may run past the end."""
        k = (self.start_period - 1) + i
        return (self.start_year + k // self.frequency, k % self.frequency + 1)

    def time_at(self, i: int) -> float:
        year, period = self.epoch_at(i)
        return year + (period - 1) / self.frequency

    @property
    def end(self) -> tuple[int, int]:
        return self.epoch_at(len(self) - 1)

    def slice(self, start: int, stop: int | None = None) -> "TimeSeries":
        """Sub-series ``values[start:stop]`` with its start epoch shifted accordingly."""
        stop = len(self) if stop is None else stop
        year, period = self.epoch_at(start)
        return TimeSeries(self.values[start:stop], year, period, self.frequency)

    def following(self, values: Sequence[float]) -> "TimeSeries":
        """A series that continues right after this one's last observation."""
        year, period = self.epoch_at(len(self))
        return TimeSeries(tuple(values), year, period, self.frequency)


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.8

    def __post_init__(self):
        if not 0.0 < self.train_fraction < 1.0:
            raise InvalidValue(f"train_fraction must lie in (0, 1), got {self.train_fraction}")


def train_length(n: int, train_fraction: float) -> int:
    # round() first so that e.g. 0.29 * 100 = 28.999999999999996 floors to 29
    return math.floor(round(train_fraction * n, 9))


def split(series: TimeSeries, spec: SplitSpec = SplitSpec()) -> tuple[TimeSeries, TimeSeries]:
    """Split into the first ``floor(train_fraction * n)`` points and the remainder.

    The training part must cover at least two full seasonal cycles.
    """
    n = len(series)
    n_train = train_length(n, spec.train_fraction)
    if n_train < 2 * series.frequency:
        raise TooShort(
            f"training segment has {n_train} points; need at least "
            f"{2 * series.frequency} (two seasonal cycles)"
        )
    if n_train >= n:
        raise TooShort("test segment would be empty")
    return series.slice(0, n_train), series.slice(n_train)


def mse(actual: Sequence[float], predicted: Sequence[float]) -> float:
    a = np.asarray(actual, dtype=float)
    p = np.asarray(predicted, dtype=float)
    if a.ndim != 1 or a.shape != p.shape:
        raise LengthMismatch(f"length mismatch: {a.shape} vs {p.shape}")
    if a.size == 0:
        raise LengthMismatch("mse needs at least one pair of values")
    return float(np.mean((a - p) ** 2))


# -- CSV ---------------------------------------------------------------------


def _parse_row(lineno: int, row: list[str]) -> tuple[dt.date, int]:
    if len(row) != 2:
        raise MalformedRow(f"line {lineno}: expected 2 fields, got {len(row)}")
    raw_date, raw_count = (x.strip() for x in row)
    try:
        date = dt.date.fromisoformat(raw_date)
    except ValueError:
        raise MalformedRow(f"line {lineno}: bad date {raw_date!r}") from None
    if len(raw_date) != 10:
        raise MalformedRow(f"line {lineno}: date {raw_date!r} is not YYYY-MM-DD")
    try:
        count = int(raw_count)
    except ValueError:
        raise MalformedRow(f"line {lineno}: bad count {raw_count!r}") from None
    if count < 0:
        raise MalformedRow(f"line {lineno}: negative count {count}")
    return date, count


def _month_index(d: dt.date) -> int:
    return d.year * 12 + d.month - 1


def parse_series_csv(text: str, frequency: int | None = None) -> TimeSeries:
    """Parse a ``yearMonth,count`` document into a :class:`TimeSeries`.

    Rows must be gap-free at a monthly stride. With ``frequency=None`` a
    document whose rows step exactly one year apart is read as a yearly
    series; anything else is monthly. Pass ``frequency`` to force one.
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(x.strip() for x in r)]
    if not rows:
        raise EmptySeries("document is empty")
    header = tuple(x.strip() for x in rows[0])
    if header != CSV_HEADER:
        raise MalformedRow(f"line 1: expected header 'yearMonth,count', got {','.join(header)!r}")
    parsed = [_parse_row(i + 2, r) for i, r in enumerate(rows[1:])]
    if not parsed:
        raise EmptySeries("no data rows")

    if frequency is None:
        frequency = 12
        if len(parsed) > 1 and _month_index(parsed[1][0]) - _month_index(parsed[0][0]) == 12:
            frequency = 1
    if frequency not in (1, 12):
        raise UnsupportedFrequency(f"CSV dates map only to frequency 1 or 12, got {frequency}")

    stride = 12 // frequency
    for i in range(1, len(parsed)):
        prev, cur = _month_index(parsed[i - 1][0]), _month_index(parsed[i][0])
        if cur - prev != stride:
            raise NonContiguous(
                f"row {i + 2}: {parsed[i][0]} does not follow {parsed[i - 1][0]} "
                f"at a stride of {stride} month(s)"
            )

    first = parsed[0][0]
    period = first.month if frequency == 12 else 1
    return TimeSeries(tuple(float(c) for _, c in parsed), first.year, period, frequency)


def serialize_series_csv(series: TimeSeries) -> str:
    """Inverse of :func:`parse_series_csv` for monthly and yearly series."""
    if series.frequency not in (1, 12):
        raise UnsupportedFrequency(
            f"no date mapping for frequency {series.frequency}; only 1 and 12 are supported"
        )
    lines = ["yearMonth,count"]
    for i, v in enumerate(series.values):
        year, period = series.epoch_at(i)
        month = period if series.frequency == 12 else 1
        count = int(v) if float(v).is_integer() else v
        lines.append(f"{year:04d}-{month:02d}-01,{count}")
    return "\n".join(lines) + "\n"
