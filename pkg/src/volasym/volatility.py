"""Realized-volatility construction on a non-overlapping window grid, paired
with same-day implied index closes, plus shock classification for the
asymmetric-response tables.

Window accounting, on series aligned to N common days (day 0 .. day N-1,
return of day j stored at index j-1):

  anchors t = W, 2W, 3W, ... while t + W <= N - 1

At each anchor the implied close is day t's level, the forward realized
window covers days t+1 .. t+W (return indices t .. t+W-1), the trailing
window return r_prev sums indices t-W .. t-1, and r_last_day is the single
return of day t (index t-1). Consecutive anchors therefore satisfy
r_cur at anchor k == r_prev at anchor k+1.
"""

import math
from dataclasses import dataclass, field
from datetime import date
from typing import List, Optional, Sequence, Tuple

import numpy as np

from volasym.errors import (
    AlignmentError,
    DegenerateInputError,
    InsufficientDataError,
    InvalidSpecError,
    WindowRangeError,
)
from volasym.ingest import PriceSeries, ReturnSeries
from volasym.stats import quantile


@dataclass(frozen=True)
class HorizonSpec:
    """Window geometry and annualization for one grid resolution."""
    window: int
    annualization_days: int = 365
    label: str = ""

    def __post_init__(self):
        if self.window < 2:
            raise InvalidSpecError(f"window must be >= 2, got {self.window}")
        if self.annualization_days < 1:
            raise InvalidSpecError(
                f"annualization_days must be >= 1, got {self.annualization_days}")


MONTHLY = HorizonSpec(window=22, label="monthly")
SHORT = HorizonSpec(window=6, label="short")


def anchor_indices(n_days: int, window: int) -> List[int]:
    """Anchor day-indices t = W, 2W, ... with t + W <= n_days - 1."""
    return list(range(window, n_days - window, window))


def realized_vol(returns: Sequence[float], horizon: HorizonSpec) -> float:
    """Annualized percent realized volatility of one window of daily returns.

    100 * sqrt(A * sum((r - rbar)^2) / W) with A and W per the horizon;
    the divisor is the window length, not W-1.
    """
    r = np.asarray(returns, dtype=np.float64)
    if r.ndim != 1 or len(r) != horizon.window:
        raise WindowRangeError(
            f"expected exactly {horizon.window} returns, got {len(r)}")
    if not np.all(np.isfinite(r)):
        raise DegenerateInputError("non-finite return in realized-vol window")
    if r.max() == r.min():
        # constant window: exactly zero variance; demeaning in floating point
        # would leave rounding dust of order eps*|r|
        return 0.0
    dev = r - r.mean()
    return 100.0 * math.sqrt(horizon.annualization_days * float(dev @ dev) / horizon.window)


def realized_vol_at(returns: ReturnSeries, start_index: int,
                    horizon: HorizonSpec) -> float:
    """realized_vol over the window starting at a return index."""
    if start_index < 0 or start_index + horizon.window > len(returns):
        raise WindowRangeError(
            f"window [{start_index}, {start_index + horizon.window}) out of "
            f"range for {len(returns)} returns")
    return realized_vol(returns.values[start_index:start_index + horizon.window],
                        horizon)


@dataclass(frozen=True)
class VolObservation:
    """One grid cell: implied level, forward realized vol, trailing shocks."""
    t_index: int
    t_date: date
    iv: float
    rv: float
    r_prev: float
    r_cur: float
    r_last_day: float


@dataclass(frozen=True)
class VolGrid:
    """Non-overlapping observation grid for one horizon."""
    horizon: HorizonSpec
    rows: Tuple[VolObservation, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(r, name) for r in self.rows], dtype=np.float64)


def build_grid(implied: PriceSeries, returns: ReturnSeries,
               horizon: HorizonSpec) -> VolGrid:
    """Assemble the non-overlapping grid from aligned implied closes and
    underlying daily returns.

    implied has N dates; returns has N-1 values with returns.dates[j-1] ==
    implied.dates[j] for every j >= 1 (i.e. both come from the same aligned
    calendar).
    """
    n_days = len(implied)
    if len(returns) != n_days - 1:
        raise AlignmentError(
            f"returns length {len(returns)} != closes length {n_days} - 1")
    for j in (1, n_days - 1):
        if n_days >= 2 and returns.dates[j - 1] != implied.dates[j]:
            raise AlignmentError(
                f"return date {returns.dates[j - 1]} != close date {implied.dates[j]}")
    w = horizon.window
    if n_days - 1 < 2 * w:
        raise InsufficientDataError(
            f"need at least {2 * w + 1} aligned days for window {w}, got {n_days}")
    vals = returns.values
    rows: List[VolObservation] = []
    for t in anchor_indices(n_days, w):
        fwd = vals[t:t + w]
        back = vals[t - w:t]
        rows.append(VolObservation(
            t_index=t,
            t_date=implied.dates[t],
            iv=float(implied.closes[t]),
            rv=realized_vol(fwd, horizon),
            r_prev=float(back.sum()),
            r_cur=float(fwd.sum()),
            r_last_day=float(vals[t - 1]),
        ))
    return VolGrid(horizon=horizon, rows=tuple(rows))


@dataclass(frozen=True)
class ShockClass:
    """Partition of grid rows by the sign or tail-quantile of r_prev.

    kind is "percentile" (tails only; interior rows are in neither set) or
    "sign" (every row is fall or jump; zero goes to jump).
    """
    kind: str
    fall_indices: Tuple[int, ...]
    jump_indices: Tuple[int, ...]
    lower_cut: float = math.nan
    upper_cut: float = math.nan

    def labels(self, n: int) -> Tuple[str, ...]:
        """Per-observation label over a grid of n rows: fall/jump/none."""
        out = ["none"] * n
        for i in self.fall_indices:
            out[i] = "fall"
        for i in self.jump_indices:
            out[i] = "jump"
        return tuple(out)


def classify_shocks(grid: VolGrid, kind: str = "percentile",
                    lower: float = 0.10, upper: float = 0.90) -> ShockClass:
    """Label each grid row's trailing shock as fall, jump, or neither.

    percentile: fall iff r_prev < Q(lower), jump iff r_prev > Q(upper),
    strict inequalities, quantiles over the full grid. sign: fall iff
    r_prev < 0, else jump.
    """
    if kind not in ("percentile", "sign"):
        raise InvalidSpecError(f"unknown classification kind {kind!r}")
    if len(grid) == 0:
        raise InsufficientDataError("cannot classify an empty grid")
    r_prev = grid.column("r_prev")
    if kind == "sign":
        fall = tuple(i for i, v in enumerate(r_prev) if v < 0.0)
        jump = tuple(i for i, v in enumerate(r_prev) if v >= 0.0)
        return ShockClass(kind="sign", fall_indices=fall, jump_indices=jump)
    if not (0.0 < lower < upper < 1.0):
        raise InvalidSpecError(
            f"need 0 < lower < upper < 1, got {lower}, {upper}")
    lo = quantile(r_prev, lower)
    hi = quantile(r_prev, upper)
    fall = tuple(i for i, v in enumerate(r_prev) if v < lo)
    jump = tuple(i for i, v in enumerate(r_prev) if v > hi)
    return ShockClass(kind="percentile", fall_indices=fall, jump_indices=jump,
                      lower_cut=lo, upper_cut=hi)


GRID_CSV_HEADER = ("t_date", "iv", "rv", "r_prev", "r_cur", "r_last_day", "label")


def grid_csv_rows(grid: VolGrid, cls: Optional[ShockClass] = None) -> List[Tuple]:
    """Rows for the grid-export table; label is fall/jump/'' per the
    classification (empty when no classification is given)."""
    labels = [""] * len(grid)
    if cls is not None:
        for i in cls.fall_indices:
            labels[i] = "fall"
        for i in cls.jump_indices:
            labels[i] = "jump"
    out = []
    for row, lab in zip(grid.rows, labels):
        out.append((row.t_date.isoformat(), row.iv, row.rv, row.r_prev,
                    row.r_cur, row.r_last_day, lab))
    return out
