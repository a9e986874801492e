"""Synthetic return generators and designed implied series: determinism,
process-definition oracles, parameter guards, and anchor-exact construction."""

import math
from datetime import timedelta

import numpy as np
import pytest

from volasym import kernels
from volasym.errors import DegenerateInputError, InvalidSpecError
from volasym.stats import ols
from volasym.synth import (
    EPOCH,
    GeneratorSpec,
    anchor_realized_vols,
    daily_series_from_anchors,
    generate_iv_for,
    generate_returns,
    make_implied_series,
    make_price_series,
    prices_from_returns,
    synthetic_dates,
)
from volasym.volatility import SHORT, anchor_indices, realized_vol


def test_generation_is_bitwise_deterministic():
    for spec in (GeneratorSpec.gaussian_iid(0.01),
                 GeneratorSpec.ar1(phi=0.6, sigma=0.02),
                 GeneratorSpec.gjr_garch(5e-6, 0.05, 0.10, 0.85)):
        a = generate_returns(spec, 500, 7)
        b = generate_returns(spec, 500, 7)
        assert np.array_equal(a, b)


def test_garch_is_gjr_with_zero_leverage():
    a = generate_returns(GeneratorSpec.garch11(5e-6, 0.08, 0.88), 1000, 3)
    b = generate_returns(GeneratorSpec.gjr_garch(5e-6, 0.08, 0.0, 0.88), 1000, 3)
    assert np.array_equal(a, b)


def test_parameter_guards():
    with pytest.raises(InvalidSpecError):
        GeneratorSpec.gaussian_iid(0.0)
    with pytest.raises(InvalidSpecError):
        GeneratorSpec.random_walk(-1.0)
    with pytest.raises(InvalidSpecError):
        GeneratorSpec.ar1(phi=1.0, sigma=0.01)
    with pytest.raises(InvalidSpecError):
        GeneratorSpec.garch11(5e-6, 0.5, 0.5)
    with pytest.raises(InvalidSpecError):
        GeneratorSpec.gjr_garch(5e-6, 0.05, 0.30, 0.85)
    with pytest.raises(InvalidSpecError):
        GeneratorSpec.gjr_garch(0.0, 0.05, 0.10, 0.80)
    with pytest.raises(InvalidSpecError):
        GeneratorSpec(kind="cauchy", sigma=1.0)
    with pytest.raises(InvalidSpecError):
        generate_returns(GeneratorSpec.gaussian_iid(0.01), 0, 1)


def test_iid_moments():
    r = generate_returns(GeneratorSpec.gaussian_iid(0.01), 10000, 15)
    assert abs(r.std() / 0.01 - 1.0) < 0.02
    assert abs(r.mean()) < 4 * 0.01 / math.sqrt(10000)


def test_random_walk_is_cumulative_sum():
    z = kernels.fill_normals(19, 400)
    walk = generate_returns(GeneratorSpec.random_walk(0.5), 400, 19)
    assert np.array_equal(walk, np.cumsum(0.5 * z))


def test_ar1_initialization_and_recursion():
    phi, sigma = 0.6, 0.02
    z = kernels.fill_normals(9, 300)
    path = generate_returns(GeneratorSpec.ar1(phi=phi, sigma=sigma), 300, 9)
    assert path[0] == sigma / math.sqrt(1.0 - phi * phi) * float(z[0])
    for t in (1, 57, 299):
        assert path[t] == pytest.approx(phi * path[t - 1] + sigma * float(z[t]),
                                        abs=1e-18)


def test_ar1_long_run_variance():
    phi, sigma = 0.5, 0.01
    path = generate_returns(GeneratorSpec.ar1(phi=phi, sigma=sigma), 200000, 44)
    assert path.var() == pytest.approx(sigma * sigma / (1 - phi * phi), rel=0.03)


def test_gjr_negative_shocks_raise_next_variance():
    # with leverage, the day after a negative return carries more variance
    # than after a positive return of equal size; proxy through |r|
    r = generate_returns(GeneratorSpec.gjr_garch(5e-6, 0.05, 0.10, 0.85),
                         200000, 70)
    after_neg = np.abs(r[1:][r[:-1] < 0.0])
    after_pos = np.abs(r[1:][r[:-1] > 0.0])
    assert after_neg.mean() > 1.01 * after_pos.mean()


def test_round_trips():
    spec = GeneratorSpec.gjr_garch(5e-6, 0.05, 0.10, 0.85)
    assert GeneratorSpec.from_dict(spec.to_dict()).to_dict() == spec.to_dict()
    iid = GeneratorSpec.gaussian_iid(0.01)
    assert set(iid.to_dict()) == {"kind", "sigma"}
    with pytest.raises(InvalidSpecError):
        GeneratorSpec.from_dict({"sigma": 1.0})
    with pytest.raises(InvalidSpecError):
        GeneratorSpec.from_dict({"kind": "ar1", "phi": 0.5, "sigma": 1.0,
                                 "rho": 0.2})


def test_prices_from_returns_round_trip():
    r = 0.01 * kernels.fill_normals(5, 300)
    closes = prices_from_returns(r, initial=250.0)
    assert closes[0] == 250.0
    assert len(closes) == 301
    back = np.log(closes[1:] / closes[:-1])
    assert np.allclose(back, r, atol=1e-12)


def test_make_price_series_calendar():
    r = 0.01 * kernels.fill_normals(6, 50)
    p = make_price_series("synth", r, initial=100.0)
    assert p.dates[0] == EPOCH
    assert p.dates[-1] - p.dates[0] == timedelta(days=50)
    assert p.closes[0] == 100.0


def test_synthetic_dates_consecutive():
    d = synthetic_dates(5)
    assert d[0] == EPOCH
    assert all((b - a).days == 1 for a, b in zip(d, d[1:]))


def test_generate_iv_for_zero_noise_is_exact_ratio():
    rv = np.array([18.0, 22.5, 30.0, 12.0])
    iv = generate_iv_for(rv, slope=0.9, noise_sigma=0.0, seed=1)
    assert np.array_equal(iv, rv / 0.9)


def test_designed_slope_recovered_by_regression():
    r = generate_returns(GeneratorSpec.gaussian_iid(0.01), 3000, 23)
    _, rvs = anchor_realized_vols(r, SHORT)
    iv = generate_iv_for(rvs, slope=0.86, noise_sigma=0.0, seed=2)
    fit = ols(rvs, iv, intercept=False)
    assert fit.coef[0] == pytest.approx(0.86, rel=1e-10)


def test_generate_iv_for_guards():
    rv = np.full(50, 1.0)
    with pytest.raises(DegenerateInputError):
        generate_iv_for(rv, slope=0.9, noise_sigma=50.0, seed=11)
    with pytest.raises(InvalidSpecError):
        generate_iv_for(rv, slope=0.0, noise_sigma=1.0, seed=1)
    with pytest.raises(InvalidSpecError):
        generate_iv_for(rv, slope=0.9, noise_sigma=-1.0, seed=1)


def test_anchor_realized_vols_matches_direct():
    r = generate_returns(GeneratorSpec.gaussian_iid(0.01), 100, 33)
    anchors, rvs = anchor_realized_vols(r, SHORT)
    assert anchors == anchor_indices(101, 6)
    for a, v in zip(anchors, rvs):
        assert v == realized_vol(r[a:a + 6], SHORT)


def test_implied_series_hits_generated_anchor_levels():
    r = generate_returns(GeneratorSpec.gaussian_iid(0.012), 200, 51)
    anchors, rvs = anchor_realized_vols(r, SHORT)
    expected = generate_iv_for(rvs, slope=0.9, noise_sigma=0.5, seed=77)
    series = make_implied_series("iv", r, SHORT, slope=0.9, noise_sigma=0.5,
                                 seed=77)
    assert len(series) == 201
    assert np.array_equal(series.closes[anchors], expected)
    # interpolation is flat beyond the outermost anchors
    assert series.closes[0] == series.closes[anchors[0]]
    assert series.closes[-1] == series.closes[anchors[-1]]


def test_implied_series_anchor_override():
    r = generate_returns(GeneratorSpec.gaussian_iid(0.012), 150, 52)
    anchors, _ = anchor_realized_vols(r, SHORT)
    vals = np.linspace(15.0, 25.0, len(anchors))
    series = make_implied_series("iv", r, SHORT, slope=1.0, noise_sigma=0.0,
                                 seed=1, anchor_values=vals)
    assert np.array_equal(series.closes[anchors], vals)
    with pytest.raises(InvalidSpecError):
        make_implied_series("iv", r, SHORT, slope=1.0, noise_sigma=0.0,
                            seed=1, anchor_values=vals[:-1])


def test_daily_series_from_anchors_guards():
    with pytest.raises(InvalidSpecError):
        daily_series_from_anchors(10, [2, 4], [1.0])
    with pytest.raises(DegenerateInputError):
        daily_series_from_anchors(10, [2, 4], [1.0, -1.0])
