"""Deterministic synthetic market data: return-process generators, implied
series constructed to carry a designed regression slope, and helpers for
turning the arrays into dated price series ready for the pipeline.

All randomness flows through the counter-mode generator in volasym.kernels,
so every output is a pure function of (spec, n, seed) on every platform.
"""

import math
from dataclasses import dataclass
from datetime import date, timedelta
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from volasym import kernels
from volasym.errors import DegenerateInputError, InvalidSpecError
from volasym.ingest import PriceSeries
from volasym.volatility import HorizonSpec, anchor_indices, realized_vol

EPOCH = date(2000, 1, 3)

KINDS = ("gaussian_iid", "random_walk", "ar1", "garch11", "gjr_garch")


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameter set for one return process; use the classmethod constructors."""
    kind: str
    sigma: float = math.nan
    phi: float = math.nan
    omega: float = math.nan
    alpha: float = math.nan
    gamma: float = math.nan
    beta: float = math.nan

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidSpecError(f"unknown generator kind {self.kind!r}")
        if self.kind in ("gaussian_iid", "random_walk", "ar1"):
            if not (math.isfinite(self.sigma) and self.sigma > 0.0):
                raise InvalidSpecError(f"{self.kind}: sigma must be > 0")
        if self.kind == "ar1":
            if not (math.isfinite(self.phi) and abs(self.phi) < 1.0):
                raise InvalidSpecError("ar1: need |phi| < 1")
        if self.kind in ("garch11", "gjr_garch"):
            g = self.gamma if self.kind == "gjr_garch" else 0.0
            for label, v in (("omega", self.omega), ("alpha", self.alpha),
                             ("beta", self.beta), ("gamma", g)):
                if not (math.isfinite(v) and v >= 0.0):
                    raise InvalidSpecError(f"{self.kind}: {label} must be >= 0")
            if self.omega <= 0.0:
                raise InvalidSpecError(f"{self.kind}: omega must be > 0")
            if self.alpha + g / 2.0 + self.beta >= 1.0:
                raise InvalidSpecError(
                    f"{self.kind}: alpha + gamma/2 + beta must be < 1 "
                    f"(got {self.alpha + g / 2.0 + self.beta})")

    @classmethod
    def gaussian_iid(cls, sigma: float) -> "GeneratorSpec":
        return cls(kind="gaussian_iid", sigma=sigma)

    @classmethod
    def random_walk(cls, sigma: float) -> "GeneratorSpec":
        return cls(kind="random_walk", sigma=sigma)

    @classmethod
    def ar1(cls, phi: float, sigma: float) -> "GeneratorSpec":
        return cls(kind="ar1", phi=phi, sigma=sigma)

    @classmethod
    def garch11(cls, omega: float, alpha: float, beta: float) -> "GeneratorSpec":
        return cls(kind="garch11", omega=omega, alpha=alpha, beta=beta)

    @classmethod
    def gjr_garch(cls, omega: float, alpha: float, gamma: float,
                  beta: float) -> "GeneratorSpec":
        return cls(kind="gjr_garch", omega=omega, alpha=alpha, gamma=gamma,
                   beta=beta)

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"kind": self.kind}
        for name in ("sigma", "phi", "omega", "alpha", "gamma", "beta"):
            v = getattr(self, name)
            if math.isfinite(v):
                out[name] = v
        return out

    @classmethod
    def from_dict(cls, d: Dict[str, object]) -> "GeneratorSpec":
        if "kind" not in d:
            raise InvalidSpecError("generator spec needs a 'kind' key")
        allowed = {"kind", "sigma", "phi", "omega", "alpha", "gamma", "beta"}
        extra = set(d) - allowed
        if extra:
            raise InvalidSpecError(f"unknown generator field(s) {sorted(extra)}")
        return cls(**{k: (v if k == "kind" else float(v)) for k, v in d.items()})


def generate_returns(spec: GeneratorSpec, n: int, seed: int) -> np.ndarray:
    """Draw n values of the process. For random_walk the output is the walk
    level itself (partial sums), not its increments."""
    if n < 1:
        raise InvalidSpecError(f"need n >= 1, got {n}")
    z = kernels.fill_normals(seed, n)
    if spec.kind == "gaussian_iid":
        return spec.sigma * z
    if spec.kind == "random_walk":
        return np.cumsum(spec.sigma * z)
    if spec.kind == "ar1":
        x0 = spec.sigma / math.sqrt(1.0 - spec.phi * spec.phi) * float(z[0])
        return kernels.ar1_path(spec.sigma * z, spec.phi, x0)
    if spec.kind == "garch11":
        h0 = spec.omega / (1.0 - spec.alpha - spec.beta)
        return kernels.gjr_returns(z, spec.omega, spec.alpha, 0.0, spec.beta, h0)
    h0 = spec.omega / (1.0 - spec.alpha - spec.gamma / 2.0 - spec.beta)
    return kernels.gjr_returns(z, spec.omega, spec.alpha, spec.gamma,
                               spec.beta, h0)


def generate_iv_for(rv: Sequence[float], slope: float, noise_sigma: float,
                    seed: int) -> np.ndarray:
    """Implied levels satisfying rv = slope*iv + e with e ~ N(0, noise_sigma^2),
    so a no-intercept regression of rv on the output recovers the slope."""
    rv_arr = np.asarray(rv, dtype=np.float64)
    if slope <= 0.0 or not math.isfinite(slope):
        raise InvalidSpecError(f"slope must be > 0, got {slope}")
    if noise_sigma < 0.0 or not math.isfinite(noise_sigma):
        raise InvalidSpecError(f"noise_sigma must be >= 0, got {noise_sigma}")
    e = noise_sigma * kernels.fill_normals(seed, len(rv_arr))
    iv = (rv_arr - e) / slope
    if len(iv) and iv.min() <= 0.0:
        raise DegenerateInputError(
            "derived implied level <= 0; lower noise_sigma or raise the "
            "volatility scale")
    return iv


def synthetic_dates(n: int, start: date = EPOCH) -> Tuple[date, ...]:
    """n consecutive calendar days starting at start."""
    return tuple(start + timedelta(days=i) for i in range(n))


def prices_from_returns(returns: Sequence[float],
                        initial: float = 100.0) -> np.ndarray:
    """Close levels whose log returns reproduce the input: n returns -> n+1 closes."""
    r = np.asarray(returns, dtype=np.float64)
    closes = np.empty(len(r) + 1, dtype=np.float64)
    closes[0] = initial
    closes[1:] = initial * np.exp(np.cumsum(r))
    return closes


def make_price_series(name: str, returns: Sequence[float],
                      initial: float = 100.0,
                      start: date = EPOCH) -> PriceSeries:
    closes = prices_from_returns(returns, initial)
    return PriceSeries(name, synthetic_dates(len(closes), start), closes)


def anchor_realized_vols(returns: Sequence[float],
                         horizon: HorizonSpec) -> Tuple[List[int], np.ndarray]:
    """Forward realized vol at each anchor of a grid built over these returns.

    Uses the same anchor accounting as the grid builder: n returns span
    n+1 days, and the window at anchor t covers return indices t..t+W-1.
    """
    r = np.asarray(returns, dtype=np.float64)
    n_days = len(r) + 1
    anchors = anchor_indices(n_days, horizon.window)
    rvs = np.array([realized_vol(r[t:t + horizon.window], horizon)
                    for t in anchors])
    return anchors, rvs


def daily_series_from_anchors(n_days: int, anchors: Sequence[int],
                              values: Sequence[float]) -> np.ndarray:
    """Positive daily level series hitting the given values exactly at the
    anchor day-indices, linear between anchors and flat beyond the ends."""
    a = np.asarray(anchors, dtype=np.float64)
    v = np.asarray(values, dtype=np.float64)
    if len(a) != len(v) or len(a) == 0:
        raise InvalidSpecError("anchors and values must be equal-length, non-empty")
    if v.min() <= 0.0:
        raise DegenerateInputError("anchor level <= 0 cannot seed a price series")
    return np.interp(np.arange(n_days, dtype=np.float64), a, v)


def make_implied_series(name: str, returns: Sequence[float],
                        horizon: HorizonSpec, slope: float,
                        noise_sigma: float, seed: int,
                        start: date = EPOCH,
                        anchor_values: Optional[np.ndarray] = None) -> PriceSeries:
    """Implied-index price series aligned day-for-day with the return series,
    carrying the designed slope at grid anchors.

    anchor_values overrides the generated levels (same length as the anchor
    list) for experiments that perturb specific anchors.
    """
    r = np.asarray(returns, dtype=np.float64)
    n_days = len(r) + 1
    anchors, rvs = anchor_realized_vols(r, horizon)
    if anchor_values is None:
        anchor_values = generate_iv_for(rvs, slope, noise_sigma, seed)
    elif len(anchor_values) != len(anchors):
        raise InvalidSpecError(
            f"anchor_values length {len(anchor_values)} != anchor count {len(anchors)}")
    closes = daily_series_from_anchors(n_days, anchors, anchor_values)
    return PriceSeries(name, synthetic_dates(n_days, start), closes)
