"""Hypothesis-test statistics: hand oracles, error taxonomy, ADF behavior
under null and alternative, and the quantile convention."""

import math

import numpy as np
import pytest

from volasym.errors import DegenerateInputError, SeriesTooShortError
from volasym.stats import adf, autocorrelations, box_pierce, quantile, t_test_zero_mean
from volasym.synth import GeneratorSpec, generate_returns


# --- one-sample t-test ---

def test_t_symmetric_sample_gives_zero_statistic():
    res = t_test_zero_mean([-1.0, 1.0, -1.0, 1.0])
    assert res.statistic == 0.0
    assert res.p_value == pytest.approx(1.0, abs=1e-12)


def test_t_constant_sample_is_degenerate():
    with pytest.raises(DegenerateInputError):
        t_test_zero_mean([1.0, 1.0, 1.0, 1.0])


def test_t_hand_oracle():
    # mean 0.02, s^2 = 0.148/4 = 0.037, t = 0.02/sqrt(0.037/5) = sqrt(2/37).
    # For 4 degrees of freedom the two-sided p has a closed form:
    # with w = t^2/(4+t^2) = 1/75, p = 1 - (3/2)sqrt(w) + (1/2)w^(3/2).
    res = t_test_zero_mean([0.1, -0.2, 0.3, 0.0, -0.1])
    assert res.statistic == pytest.approx(math.sqrt(2.0 / 37.0), rel=1e-12)
    assert res.detail["mean"] == pytest.approx(0.02, abs=1e-15)
    assert res.detail["sd"] == pytest.approx(math.sqrt(0.037), rel=1e-12)
    w = 1.0 / 75.0
    p_exact = 1.0 - 1.5 * math.sqrt(w) + 0.5 * w ** 1.5
    assert res.p_value == pytest.approx(p_exact, rel=1e-9)


def test_t_shift_moves_statistic_monotonically():
    x = np.array([0.3, -0.1, 0.2, 0.5, -0.4])
    stats = [t_test_zero_mean(x + c).statistic for c in (-0.5, 0.0, 0.5)]
    assert stats[0] < stats[1] < stats[2]
    centered = t_test_zero_mean(x - x.mean())
    assert centered.statistic == pytest.approx(0.0, abs=1e-12)


def test_t_needs_two_points():
    with pytest.raises(SeriesTooShortError):
        t_test_zero_mean([1.0])


# --- Box-Pierce ---

def test_bp_hand_autocorrelation_oracle():
    x = np.array([0.5, -0.2, 0.3, 0.9, -1.1, 0.4, 0.0, -0.6, 0.8, -0.3])
    m = x.mean()
    dev = x - m
    rho1 = float((dev[:-1] * dev[1:]).sum() / (dev * dev).sum())
    res = box_pierce(x, lags=1)
    assert res.statistic == pytest.approx(10.0 * rho1 * rho1, rel=1e-12)
    assert res.detail["lags"] == 1
    assert res.detail["autocorrelations"][0] == pytest.approx(rho1, rel=1e-12)


def test_bp_zero_autocorrelation_fixture():
    # adjacent products all vanish, so rho_1 = 0 exactly
    x = [1.0, 0.0, -1.0, 0.0] * 3
    res = box_pierce(x, lags=1)
    assert res.statistic == 0.0
    assert res.p_value == 1.0


def test_bp_statistic_nonnegative():
    rng = np.random.default_rng(7)
    for _ in range(10):
        assert box_pierce(rng.standard_normal(50), lags=3).statistic >= 0.0


def test_bp_too_short_and_degenerate():
    with pytest.raises(SeriesTooShortError):
        box_pierce([1.0, 2.0], lags=1)
    with pytest.raises(DegenerateInputError):
        box_pierce(np.ones(30), lags=1)


def test_bp_null_uniformity_small_mc():
    spec = GeneratorSpec.gaussian_iid(sigma=1.0)
    hits = 0
    trials = 2000
    for j in range(trials):
        x = generate_returns(spec, 100, 600000 + j)
        if box_pierce(x, lags=1).p_value < 0.05:
            hits += 1
    assert 0.03 <= hits / trials <= 0.07


def test_autocorrelations_hand_value():
    # devs (-1.5,-0.5,0.5,1.5): lag-1 products sum to 1.25, squares to 5
    rho = autocorrelations(np.array([1.0, 2.0, 3.0, 4.0]), 1)
    assert rho[0] == 0.25


# --- ADF ---

def test_adf_detail_records_critical_values():
    x = np.cumsum(np.random.default_rng(3).standard_normal(200))
    res = adf(x, lag_order=6, deterministic="none")
    assert res.detail["lags"] == 6
    assert res.detail["deterministic"] == "none"
    assert res.detail["crit_1pct"] < res.detail["crit_5pct"] < res.detail["crit_10pct"]
    assert 0.0 <= res.p_value <= 1.0


def test_adf_scale_invariant():
    x = np.cumsum(np.random.default_rng(9).standard_normal(150))
    a = adf(x, lag_order=2, deterministic="intercept")
    b = adf(1000.0 * x, lag_order=2, deterministic="intercept")
    assert a.statistic == pytest.approx(b.statistic, rel=1e-9)
    assert a.p_value == pytest.approx(b.p_value, abs=1e-9)


def test_adf_stationary_series_strongly_rejected():
    spec = GeneratorSpec.ar1(phi=0.5, sigma=1.0)
    x = generate_returns(spec, 1000, 99)
    res = adf(x, lag_order=6, deterministic="none")
    assert res.statistic < -5.0
    assert res.p_value < 0.01


def test_adf_flat_series_is_degenerate():
    # a flat series differences to exactly zero, leaving nothing to fit
    with pytest.raises(DegenerateInputError):
        adf(np.full(80, 5.0), lag_order=0, deterministic="none")


def test_adf_null_size_small_mc():
    spec = GeneratorSpec.random_walk(sigma=1.0)
    hits = 0
    trials = 1500
    for j in range(trials):
        x = generate_returns(spec, 250, 700000 + j)
        if adf(x, lag_order=0, deterministic="intercept").p_value < 0.05:
            hits += 1
    assert 0.030 <= hits / trials <= 0.070


def test_adf_power_iid_alternative():
    spec = GeneratorSpec.gaussian_iid(sigma=1.0)
    hits = 0
    trials = 300
    for j in range(trials):
        x = generate_returns(spec, 500, 800000 + j)
        if adf(x, lag_order=0, deterministic="none").p_value < 0.05:
            hits += 1
    assert hits / trials > 0.95


def test_adf_clamp_flagged():
    spec = GeneratorSpec.ar1(phi=0.2, sigma=1.0)
    x = generate_returns(spec, 2000, 5)
    res = adf(x, lag_order=0, deterministic="none")
    assert res.p_value == 0.001
    assert res.detail["clamped"] is True


def test_adf_too_short():
    with pytest.raises(SeriesTooShortError):
        adf(np.arange(5.0), lag_order=6, deterministic="none")


# --- quantile ---

def test_quantile_median_of_three():
    assert quantile([1.0, 2.0, 3.0], 0.5) == 2.0


def test_quantile_linear_interpolation_convention():
    x = np.arange(1.0, 101.0)
    assert quantile(x, 0.10) == pytest.approx(10.9, abs=1e-12)
    assert quantile(x, 0.90) == pytest.approx(90.1, abs=1e-12)


def test_quantile_constant_vector():
    assert quantile(np.full(7, 4.2), 0.3) == 4.2


def test_quantile_order_independent():
    rng = np.random.default_rng(13)
    x = rng.standard_normal(57)
    shuffled = x.copy()
    rng.shuffle(shuffled)
    assert quantile(x, 0.25) == pytest.approx(quantile(shuffled, 0.25),
                                              abs=1e-15)
