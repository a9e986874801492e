"""Self-calibration suites: empirical size and power of the shipped test
statistics, measured on this package's own generators so a broken
implementation cannot certify itself with stale constants.

Each suite returns a summary dict with per-check rates, binomial standard
errors, declared acceptance bands, and pass flags. Checks marked
informational report their rate without gating the suite.
"""

import math
from typing import Dict, List, Optional

import numpy as np

from volasym.asymmetry import asymmetry_regression, spec_for_table
from volasym.errors import InvalidSpecError, VolasymError
from volasym.ingest import PriceSeries, ReturnSeries
from volasym.stats import adf, box_pierce
from volasym.synth import (
    GeneratorSpec,
    generate_returns,
    make_implied_series,
    make_price_series,
    synthetic_dates,
)
from volasym.volatility import HorizonSpec, build_grid

ALPHA = 0.05

# independent seed lanes so no suite reuses another's draws
_ADF_LANE = 10_000_000
_BP_LANE = 20_000_000
_POWER_LANE = 30_000_000
_IV_LANE = 40_000_000


def _rate_entry(name: str, hits: int, trials: int, band_low: Optional[float],
                band_high: Optional[float],
                informational: bool = False) -> Dict[str, object]:
    rate = hits / trials
    se = math.sqrt(max(rate * (1.0 - rate), 1e-12) / trials)
    entry: Dict[str, object] = {
        "check": name, "rate": rate, "trials": trials, "binomial_se": se,
        "band_low": band_low, "band_high": band_high,
        "informational": informational,
    }
    if informational:
        entry["passed"] = True
    else:
        ok = True
        if band_low is not None and rate < band_low:
            ok = False
        if band_high is not None and rate > band_high:
            ok = False
        entry["passed"] = ok
    return entry


def adf_suite(trials: int = 5000, seed: int = 42) -> Dict[str, object]:
    """Unit-root test calibration: size on pure random walks (the null is
    true, so 5% rejections expected) and an informational power line on
    stationary white noise."""
    if trials < 100:
        raise InvalidSpecError(f"need >= 100 trials, got {trials}")
    null_len = 250
    walk = GeneratorSpec.random_walk(sigma=1.0)
    hits = 0
    for j in range(trials):
        x = generate_returns(walk, null_len, seed + _ADF_LANE + j)
        if adf(x, lag_order=6, deterministic="none").p_value < ALPHA:
            hits += 1
    checks = [_rate_entry(f"adf_null_size_rw{null_len}", hits, trials,
                          0.035, 0.065)]

    power_trials = min(trials, 500)
    noise = GeneratorSpec.gaussian_iid(sigma=1.0)
    hits = 0
    for j in range(power_trials):
        x = generate_returns(noise, 500, seed + _ADF_LANE + trials + j)
        if adf(x, lag_order=6, deterministic="none").p_value < ALPHA:
            hits += 1
    checks.append(_rate_entry("adf_power_iid500", hits, power_trials,
                              0.95, None, informational=True))
    return _summary("adf", checks)


def box_pierce_suite(trials: int = 10000, seed: int = 42) -> Dict[str, object]:
    """Autocorrelation test calibration: size on i.i.d. noise and power
    against AR(1) phi=0.5, both at the grid length the battery typically
    sees."""
    if trials < 100:
        raise InvalidSpecError(f"need >= 100 trials, got {trials}")
    n = 280
    noise = GeneratorSpec.gaussian_iid(sigma=1.0)
    hits = 0
    for j in range(trials):
        x = generate_returns(noise, n, seed + _BP_LANE + j)
        if box_pierce(x, lags=1).p_value < ALPHA:
            hits += 1
    checks = [_rate_entry(f"bp_null_size_iid{n}", hits, trials, 0.035, 0.065)]

    power_trials = min(trials, 1000)
    ar = GeneratorSpec.ar1(phi=0.5, sigma=1.0)
    hits = 0
    for j in range(power_trials):
        x = generate_returns(ar, n, seed + _BP_LANE + trials + j)
        if box_pierce(x, lags=1).p_value < ALPHA:
            hits += 1
    checks.append(_rate_entry(f"bp_power_ar1_phi05_{n}", hits, power_trials,
                              0.90, None))
    return _summary("box_pierce", checks)


# omega sets the variance scale only (an exact rescale of the process), so
# it is pitched to a realistic index level ~19 where derived implied levels
# stay comfortably positive
GJR_OMEGA = 5e-6
GJR_ALPHA = 0.05
GJR_GAMMA = 0.10
GJR_BETA = 0.85
POWER_N_DAILY = 5000
POWER_SLOPE = 0.86
POWER_IV_NOISE = 1.5


def _indicator_rejection(returns_spec: GeneratorSpec, n_daily: int,
                         window: int, trials: int, seed: int,
                         annualization_days: int = 365,
                         constant_iv: bool = False) -> Dict[str, int]:
    """Count seeds where the full-sample indicator coefficient comes out
    negative and significant at 5% on an end-to-end synthetic run.

    The measured regression targets realized volatility, so the implied
    column is inert; constant_iv swaps the cointegrated implied series for a
    flat positive level where derived-level positivity would otherwise
    discard seeds (the noisy short-window case)."""
    horizon = HorizonSpec(window=window, annualization_days=annualization_days)
    hits = 0
    usable = 0
    for j in range(trials):
        r = generate_returns(returns_spec, n_daily, seed + _POWER_LANE + j)
        try:
            if constant_iv:
                implied = PriceSeries("iv", synthetic_dates(n_daily + 1),
                                      np.full(n_daily + 1, 20.0))
            else:
                implied = make_implied_series("iv", r, horizon, POWER_SLOPE,
                                              POWER_IV_NOISE,
                                              seed + _IV_LANE + j)
            index = make_price_series("index", r)
            rets = ReturnSeries("index", index.dates[1:], r)
            grid = build_grid(implied, rets, horizon)
            fit = asymmetry_regression(grid, spec_for_table("T4", "rv"))
        except VolasymError:
            continue
        usable += 1
        beta4 = float(fit.coef[4])
        p4 = float(fit.p_value[4])
        if beta4 < 0.0 and p4 < ALPHA:
            hits += 1
    return {"hits": hits, "usable": usable}


def power_suite(trials: int = 200, seed: int = 42) -> Dict[str, object]:
    """End-to-end indicator power and size on conditional-variance data.

    Power arm: leverage-asymmetric generator (gamma > 0), monthly grid;
    the indicator should come out negative-significant. Size arm: symmetric
    generator (gamma = 0); rejections should stay near the nominal level.
    The short-window rates are reported informationally: at that resolution
    the lagged realized value is a weak variance proxy, which inflates the
    indicator's apparent significance for reasons unrelated to leverage.
    """
    if trials < 100:
        raise InvalidSpecError(f"need >= 100 trials, got {trials}")
    gjr = GeneratorSpec.gjr_garch(GJR_OMEGA, GJR_ALPHA, GJR_GAMMA, GJR_BETA)
    sym = GeneratorSpec.garch11(GJR_OMEGA, GJR_ALPHA, GJR_BETA)

    checks: List[Dict[str, object]] = []
    power = _indicator_rejection(gjr, POWER_N_DAILY, 22, trials, seed)
    checks.append(_rate_entry("power_gjr_monthly", power["hits"],
                              max(power["usable"], 1), 0.80, None))
    size = _indicator_rejection(sym, POWER_N_DAILY, 22, trials, seed + trials)
    checks.append(_rate_entry("size_garch_monthly", size["hits"],
                              max(size["usable"], 1), None, 0.10))

    short_trials = min(trials, 100)
    power_s = _indicator_rejection(gjr, POWER_N_DAILY, 6, short_trials,
                                   seed + 2 * trials, constant_iv=True)
    checks.append(_rate_entry("power_gjr_short", power_s["hits"],
                              max(power_s["usable"], 1), None, None,
                              informational=True))
    size_s = _indicator_rejection(sym, POWER_N_DAILY, 6, short_trials,
                                  seed + 3 * trials, constant_iv=True)
    checks.append(_rate_entry("size_garch_short", size_s["hits"],
                              max(size_s["usable"], 1), None, None,
                              informational=True))
    return _summary("power", checks)


def _summary(suite: str, checks: List[Dict[str, object]]) -> Dict[str, object]:
    return {
        "suite": suite,
        "checks": checks,
        "passed": all(c["passed"] for c in checks),
    }


SUITES = {
    "adf": adf_suite,
    "box_pierce": box_pierce_suite,
    "power": power_suite,
}


def run_suite(suite: str, trials: Optional[int] = None,
              seed: int = 42) -> Dict[str, object]:
    if suite not in SUITES:
        raise InvalidSpecError(
            f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    fn = SUITES[suite]
    if trials is None:
        return fn(seed=seed)
    return fn(trials=trials, seed=seed)
