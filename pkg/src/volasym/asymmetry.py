"""Asymmetric-response regressions on the volatility grid and the
level-relationship battery between realized and implied volatility.

The regression family shares one design: target on [1, shock(t-1), r(t),
lagged target, I(t-1)*shock(t-1)] where I(t-1) = 1 iff the shock was
negative. Variants differ only in the shock variable, the sample filter,
and the grid horizon.
"""

import math
from dataclasses import dataclass, replace
from typing import Dict, Optional, Tuple

import numpy as np

from volasym.errors import (
    DegenerateInputError,
    HorizonMismatchError,
    InsufficientDataError,
    InvalidSpecError,
    RankDeficiencyError,
)
from volasym.stats import (
    RegressionResult,
    TestResult,
    adf,
    box_pierce,
    ols,
    t_test_zero_mean,
)
from volasym.volatility import ShockClass, VolGrid, classify_shocks

COLUMN_NAMES = ("Intercept", "shock(t-1)", "r(t)", "AR(t-1)", "Indicator(t-1)")

TARGETS = ("rv", "iv")
SHOCK_VARIABLES = ("horizon_return", "last_day_return")
SAMPLE_FILTERS = ("full", "extreme_tails")

MIN_BATTERY_OBS = 30
MIN_REGRESSION_ROWS = 20


@dataclass(frozen=True)
class AsymmetrySpec:
    """One regression variant: what to predict, which shock drives the
    indicator, and whether the sample keeps only tail rows."""
    target: str
    shock_variable: str = "horizon_return"
    sample_filter: str = "full"
    lower_q: float = 0.10
    upper_q: float = 0.90

    def __post_init__(self):
        if self.target not in TARGETS:
            raise InvalidSpecError(f"target must be one of {TARGETS}")
        if self.shock_variable not in SHOCK_VARIABLES:
            raise InvalidSpecError(
                f"shock_variable must be one of {SHOCK_VARIABLES}")
        if self.sample_filter not in SAMPLE_FILTERS:
            raise InvalidSpecError(
                f"sample_filter must be one of {SAMPLE_FILTERS}")
        if self.sample_filter == "extreme_tails":
            if self.shock_variable != "horizon_return":
                raise InvalidSpecError(
                    "extreme_tails filtering requires the horizon_return shock")
            if not (0.0 < self.lower_q < self.upper_q < 1.0):
                raise InvalidSpecError(
                    f"need 0 < lower_q < upper_q < 1, got "
                    f"{self.lower_q}, {self.upper_q}")


@dataclass(frozen=True)
class CointegrationReport:
    """Level-relationship summary: both slope fits plus residual diagnostics.

    aic_delta and bic_delta are (no-intercept minus with-intercept); negative
    values favor the no-intercept model. Residual tests run on the
    no-intercept residual.
    """
    slope_no_intercept: float
    slope_with_intercept: float
    intercept: float
    intercept_p: float
    aic_delta: float
    bic_delta: float
    residual_t: TestResult
    residual_bp: TestResult
    residual_adf: TestResult
    n: int

    def to_dict(self) -> Dict[str, object]:
        def test_dict(t: TestResult) -> Dict[str, object]:
            return {"name": t.name, "statistic": t.statistic,
                    "p_value": t.p_value, "detail": dict(t.detail)}
        return {
            "slope_no_intercept": self.slope_no_intercept,
            "slope_with_intercept": self.slope_with_intercept,
            "intercept": self.intercept,
            "intercept_p": self.intercept_p,
            "aic_delta": self.aic_delta,
            "bic_delta": self.bic_delta,
            "residual_t": test_dict(self.residual_t),
            "residual_bp": test_dict(self.residual_bp),
            "residual_adf": test_dict(self.residual_adf),
            "n": self.n,
        }


def _flagged(fn, name: str) -> TestResult:
    """Run a residual diagnostic, converting degenerate input into a flagged
    NaN result instead of an exception. Rank deficiency inside a diagnostic's
    own auxiliary regression (e.g. ADF on a numerically-zero residual) is the
    same condition: the residual carries too little variation to diagnose."""
    try:
        result = fn()
    except (DegenerateInputError, RankDeficiencyError) as exc:
        return TestResult(name=name, statistic=math.nan, p_value=math.nan,
                          detail={"degenerate": True, "reason": str(exc)})
    return replace(result, detail={**dict(result.detail), "degenerate": False})


def cointegration_battery(grid: VolGrid, adf_lag: int = 6,
                          bp_lag: int = 1) -> CointegrationReport:
    """Fit rv = b*iv and rv = a + b*iv, and test the no-intercept residual
    for zero mean (Student-t), autocorrelation (Box-Pierce), and a unit root
    (ADF, no deterministic term since the residual is mean-free by
    construction)."""
    if len(grid) < MIN_BATTERY_OBS:
        raise InsufficientDataError(
            f"battery needs >= {MIN_BATTERY_OBS} grid rows, got {len(grid)}")
    rv = grid.column("rv")
    iv = grid.column("iv")
    fit0 = ols(rv, iv, intercept=False, column_names=("iv",))
    fit1 = ols(rv, iv, intercept=True, column_names=("Intercept", "iv"))
    resid = fit0.residuals
    return CointegrationReport(
        slope_no_intercept=float(fit0.coef[0]),
        slope_with_intercept=float(fit1.coef[1]),
        intercept=float(fit1.coef[0]),
        intercept_p=float(fit1.p_value[0]),
        aic_delta=fit0.aic - fit1.aic,
        bic_delta=fit0.bic - fit1.bic,
        residual_t=_flagged(lambda: t_test_zero_mean(resid), "t_test"),
        residual_bp=_flagged(lambda: box_pierce(resid, lags=bp_lag), "box_pierce"),
        residual_adf=_flagged(
            lambda: adf(resid, lag_order=adf_lag, deterministic="none"), "adf"),
        n=len(grid),
    )


def _design(grid: VolGrid, spec: AsymmetrySpec):
    """Rows, target vector, and design columns for one regression variant.

    Row k of the grid enters when it has a predecessor cell (k >= 1) and
    survives the sample filter; the lagged target always comes from the
    full-grid predecessor, even when filtering removed it from the sample.
    """
    n = len(grid)
    if spec.sample_filter == "extreme_tails":
        cls = classify_shocks(grid, "percentile", spec.lower_q, spec.upper_q)
        keep = set(cls.fall_indices) | set(cls.jump_indices)
        rows = [k for k in range(1, n) if k in keep]
    else:
        rows = list(range(1, n))
    if len(rows) < MIN_REGRESSION_ROWS:
        raise InsufficientDataError(
            f"regression needs >= {MIN_REGRESSION_ROWS} rows after "
            f"filtering, got {len(rows)}")
    shock_col = ("r_prev" if spec.shock_variable == "horizon_return"
                 else "r_last_day")
    shock = np.array([getattr(grid.rows[k], shock_col) for k in rows])
    r_cur = np.array([grid.rows[k].r_cur for k in rows])
    lagged = np.array([getattr(grid.rows[k - 1], spec.target) for k in rows])
    indicator = (shock < 0.0).astype(np.float64)
    target = np.array([getattr(grid.rows[k], spec.target) for k in rows])
    X = np.column_stack([shock, r_cur, lagged, indicator * shock])
    return target, X, rows


def asymmetry_regression(grid: VolGrid, spec: AsymmetrySpec) -> RegressionResult:
    """Estimate one variant of the shared design. Raises a rank-deficiency
    error naming the indicator interaction when every shock carries the
    same sign (the interaction column is then 0 or collinear with the
    shock)."""
    y, X, rows = _design(grid, spec)
    interaction = X[:, 3]
    shock = X[:, 0]
    degenerate_interaction = (np.all(interaction == 0.0)
                              or np.allclose(interaction, shock))
    try:
        return ols(y, X, intercept=True, column_names=COLUMN_NAMES)
    except RankDeficiencyError:
        if degenerate_interaction:
            raise RankDeficiencyError(
                "indicator interaction column is degenerate: every shock in "
                "the sample has the same sign") from None
        raise


TABLE_IDS = ("T2", "T3", "T4", "T5")


def spec_for_table(table_id: str, target: str, lower_q: float = 0.10,
                   upper_q: float = 0.90) -> AsymmetrySpec:
    """Regression configuration behind each published-table variant."""
    if table_id == "T2":
        return AsymmetrySpec(target=target, shock_variable="horizon_return",
                             sample_filter="extreme_tails",
                             lower_q=lower_q, upper_q=upper_q)
    if table_id == "T3":
        return AsymmetrySpec(target=target, shock_variable="last_day_return",
                             sample_filter="full")
    if table_id in ("T4", "T5"):
        return AsymmetrySpec(target=target, shock_variable="horizon_return",
                             sample_filter="full")
    raise InvalidSpecError(f"unknown table id {table_id!r}")


def run_table(grid: VolGrid, table_id: str,
              monthly_window: int = 22, short_window: int = 6,
              lower_q: float = 0.10,
              upper_q: float = 0.90) -> Tuple[RegressionResult, RegressionResult]:
    """Both target variants (rv-target, iv-target) of one table's regression.

    T2/T3/T4 run on the monthly-window grid, T5 on the short-window grid;
    a grid built at any other window is rejected.
    """
    if table_id not in TABLE_IDS:
        raise InvalidSpecError(f"unknown table id {table_id!r}")
    expected = short_window if table_id == "T5" else monthly_window
    if grid.horizon.window != expected:
        raise HorizonMismatchError(
            f"{table_id} expects a {expected}-day grid, got "
            f"{grid.horizon.window}-day")
    rv_fit = asymmetry_regression(
        grid, spec_for_table(table_id, "rv", lower_q, upper_q))
    iv_fit = asymmetry_regression(
        grid, spec_for_table(table_id, "iv", lower_q, upper_q))
    return rv_fit, iv_fit
