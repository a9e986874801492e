"""Event studies of volatility around classified return shocks: cumulative
implied and realized paths over the four steps t-1..t+2, their difference,
and a per-step zero-mean test of that difference across events.

The implied value at each step is the index close at that grid anchor
(known at the step's start); the realized value is that anchor's forward
window volatility (known only afterwards). The panel therefore compares an
ex-ante forecast path with the ex-post outcome path.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from volasym.errors import (
    DegenerateInputError,
    InvalidSpecError,
    TooFewEventsError,
)
from volasym.stats import t_test_zero_mean
from volasym.volatility import ShockClass, VolGrid

STEP_OFFSETS = (-1, 0, 1, 2)
STEP_LABELS = ("t-1", "t", "t+1", "t+2")
MIN_EVENTS = 5


@dataclass(frozen=True)
class EventPanel:
    """Averaged cumulative volatility paths around one class of shock.

    Arrays are indexed by step (t-1, t, t+1, t+2). diff equals
    mean_cum_iv - mean_cum_rv exactly; diff_p is NaN where the per-event
    diffs are degenerate (notably at t-1, where both paths are pinned to 0).
    """
    label: str
    mean_cum_iv: np.ndarray
    mean_cum_rv: np.ndarray
    diff: np.ndarray
    diff_p: np.ndarray
    n_events: int
    n_dropped_boundary: int
    n_dropped_zero: int
    log_scale: bool = False


def _cum_path(levels: np.ndarray, log_scale: bool) -> np.ndarray:
    """Cumulative return of a 4-step level path vs its first entry."""
    base = levels[0]
    if log_scale:
        return np.log(levels / base)
    return levels / base - 1.0


def event_panel(grid: VolGrid, labels: ShockClass, which: str,
                log_scale: bool = False) -> EventPanel:
    """Average the per-event cumulative paths for one shock label.

    Events too close to the grid edge for a full t-1..t+2 window are
    dropped whole, as are events whose t-1 level is zero in either series;
    both drop counts are reported on the panel.
    """
    if which not in ("fall", "jump"):
        raise InvalidSpecError(f"label must be 'fall' or 'jump', got {which!r}")
    anchors = labels.fall_indices if which == "fall" else labels.jump_indices
    n = len(grid)
    iv = grid.column("iv")
    rv = grid.column("rv")

    usable: List[int] = []
    dropped_boundary = 0
    dropped_zero = 0
    for t in anchors:
        if t - 1 < 0 or t + 2 > n - 1:
            dropped_boundary += 1
            continue
        if iv[t - 1] == 0.0 or rv[t - 1] == 0.0:
            dropped_zero += 1
            continue
        usable.append(t)
    if len(usable) < MIN_EVENTS:
        raise TooFewEventsError(
            f"need >= {MIN_EVENTS} usable {which} events, got {len(usable)} "
            f"(dropped {dropped_boundary} at boundary, {dropped_zero} with "
            f"zero t-1 level)")

    cum_iv = np.empty((len(usable), 4))
    cum_rv = np.empty((len(usable), 4))
    for row, t in enumerate(usable):
        window = slice(t - 1, t + 3)
        cum_iv[row] = _cum_path(iv[window], log_scale)
        cum_rv[row] = _cum_path(rv[window], log_scale)

    mean_iv = cum_iv.mean(axis=0)
    mean_rv = cum_rv.mean(axis=0)
    event_diffs = cum_iv - cum_rv
    diff_p = np.empty(4)
    for s in range(4):
        try:
            diff_p[s] = t_test_zero_mean(event_diffs[:, s]).p_value
        except DegenerateInputError:
            diff_p[s] = math.nan
    return EventPanel(label=which, mean_cum_iv=mean_iv, mean_cum_rv=mean_rv,
                      diff=mean_iv - mean_rv, diff_p=diff_p,
                      n_events=len(usable),
                      n_dropped_boundary=dropped_boundary,
                      n_dropped_zero=dropped_zero, log_scale=log_scale)


def figure_family(kind: str, window: int, monthly_window: int = 22,
                  short_window: int = 6) -> Tuple[Tuple[str, str], Tuple[str, str]]:
    """((figure-id, label), (figure-id, label)) pair for one classification
    kind on one grid resolution."""
    if kind == "percentile" and window == monthly_window:
        return (("fig2", "fall"), ("fig3", "jump"))
    if kind == "sign" and window == monthly_window:
        return (("fig4", "fall"), ("fig5", "jump"))
    if kind == "sign" and window == short_window:
        return (("fig6", "fall"), ("fig7", "jump"))
    raise InvalidSpecError(
        f"no figure family for {kind!r} classification on a {window}-day grid")


def run_figures(grid: VolGrid, classification: ShockClass,
                monthly_window: int = 22, short_window: int = 6,
                log_scale: bool = False,
                skipped: Optional[List[str]] = None) -> Dict[str, EventPanel]:
    """Both panels of the figure family selected by the classification kind
    and grid resolution. A panel without enough events is omitted from the
    map (its sibling still runs) and its diagnostic is appended to `skipped`
    when a list is supplied; if neither panel can be built the error carries
    both failure messages."""
    pairs = figure_family(classification.kind, grid.horizon.window,
                          monthly_window, short_window)
    panels: Dict[str, EventPanel] = {}
    failures: List[str] = []
    for fig_id, label in pairs:
        try:
            panels[fig_id] = event_panel(grid, classification, label,
                                         log_scale=log_scale)
        except TooFewEventsError as exc:
            failures.append(f"{fig_id} ({label}): {exc}")
    if not panels:
        raise TooFewEventsError("; ".join(failures))
    if skipped is not None:
        skipped.extend(failures)
    return panels
