"""Run configuration: one declarative surface gathering every pipeline
parameter, with precedence flags > file > defaults, strict validation, a
stable dict round-trip, and a content hash for the manifest.

The output directory participates in the round-trip but not in the hash:
runs into different directories with the same analysis parameters are the
same configuration.
"""

import hashlib
import json
import os
from dataclasses import dataclass, fields
from datetime import date
from typing import Dict, Mapping, Optional

from volasym.errors import ConfigError

HORIZON_CHOICES = ("monthly", "short", "both")
SHOCK_MODE_CHOICES = ("percentile", "sign", "both")

OUT_DIR_ENV = "VOLASYM_OUT"


@dataclass(frozen=True)
class RunConfig:
    index_csv: Optional[str] = None
    iv_monthly_csv: Optional[str] = None
    iv_short_csv: Optional[str] = None
    start_date: Optional[str] = None
    end_date: Optional[str] = None
    horizons: str = "both"
    monthly_window: int = 22
    short_window: int = 6
    annualization_days: int = 365
    shock_mode: str = "both"
    lower_q: float = 0.10
    upper_q: float = 0.90
    adf_lag: int = 6
    bp_lag: int = 1
    out_dir: str = "out"
    seed: int = 42
    emit_grid: bool = False
    log_scale_figures: bool = False
    date_column: str = "date"
    close_column: str = "close"
    date_format: Optional[str] = None

    def runs_monthly(self) -> bool:
        return self.horizons in ("monthly", "both")

    def runs_short(self) -> bool:
        return self.horizons in ("short", "both")

    def to_dict(self) -> Dict[str, object]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def config_hash(self) -> str:
        payload = {k: v for k, v in self.to_dict().items() if k != "out_dir"}
        body = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(body.encode("utf-8")).hexdigest()


_FIELD_TYPES = {f.name: f.type for f in fields(RunConfig)}
_INT_FIELDS = {"monthly_window", "short_window", "annualization_days",
               "adf_lag", "bp_lag", "seed"}
_FLOAT_FIELDS = {"lower_q", "upper_q"}
_BOOL_FIELDS = {"emit_grid", "log_scale_figures"}


def _coerce(name: str, value):
    if value is None:
        return None
    try:
        if name in _INT_FIELDS:
            if isinstance(value, bool) or (isinstance(value, float)
                                           and value != int(value)):
                raise ValueError(value)
            return int(value)
        if name in _FLOAT_FIELDS:
            return float(value)
        if name in _BOOL_FIELDS:
            if isinstance(value, bool):
                return value
            raise ValueError(value)
        return str(value)
    except (TypeError, ValueError):
        raise ConfigError(f"config field {name!r}: bad value {value!r}") from None


def resolve(file_values: Optional[Mapping[str, object]] = None,
            overrides: Optional[Mapping[str, object]] = None) -> RunConfig:
    """Merge defaults, file values, and flag overrides into a validated
    RunConfig. Unknown keys are rejected; VOLASYM_OUT replaces the built-in
    out_dir default (file and flags still win over it)."""
    merged: Dict[str, object] = {}
    env_out = os.environ.get(OUT_DIR_ENV)
    if env_out:
        merged["out_dir"] = env_out
    for source, src_name in ((file_values, "config file"),
                             (overrides, "flags")):
        if not source:
            continue
        unknown = set(source) - set(_FIELD_TYPES)
        if unknown:
            raise ConfigError(f"{src_name}: unknown key(s) {sorted(unknown)}")
        for k, v in source.items():
            if v is not None:
                merged[k] = _coerce(k, v)
    cfg = RunConfig(**merged)
    validate(cfg)
    return cfg


def load_config_file(path: str) -> Dict[str, object]:
    if not os.path.exists(path):
        raise ConfigError(f"config file not found: {path}")
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    return data


def _check_date(name: str, value: Optional[str]) -> None:
    if value is None:
        return
    try:
        date.fromisoformat(value)
    except ValueError:
        raise ConfigError(f"{name} must be ISO YYYY-MM-DD, got {value!r}") from None


def validate(cfg: RunConfig, require_inputs: bool = False) -> None:
    """Structural validation; require_inputs additionally demands that every
    input path the selected horizons need is configured (whether those files
    exist is checked where they are read)."""
    if cfg.horizons not in HORIZON_CHOICES:
        raise ConfigError(f"horizons must be one of {HORIZON_CHOICES}")
    if cfg.shock_mode not in SHOCK_MODE_CHOICES:
        raise ConfigError(f"shock_mode must be one of {SHOCK_MODE_CHOICES}")
    if cfg.monthly_window < 2 or cfg.short_window < 2:
        raise ConfigError("windows must be >= 2")
    if cfg.monthly_window == cfg.short_window:
        raise ConfigError("monthly_window and short_window must differ")
    if cfg.annualization_days < 1:
        raise ConfigError("annualization_days must be >= 1")
    if not (0.0 < cfg.lower_q < cfg.upper_q < 1.0):
        raise ConfigError(
            f"need 0 < lower_q < upper_q < 1, got {cfg.lower_q}, {cfg.upper_q}")
    if cfg.adf_lag < 0:
        raise ConfigError("adf_lag must be >= 0")
    if cfg.bp_lag < 1:
        raise ConfigError("bp_lag must be >= 1")
    _check_date("start_date", cfg.start_date)
    _check_date("end_date", cfg.end_date)
    if cfg.start_date and cfg.end_date and cfg.start_date > cfg.end_date:
        raise ConfigError("start_date is after end_date")
    if require_inputs:
        # presence of the path fields is a config concern; whether the files
        # exist surfaces at load time in the ingest stage
        if cfg.index_csv is None:
            raise ConfigError("index_csv is required for the pipeline")
        if cfg.runs_monthly() and cfg.iv_monthly_csv is None:
            raise ConfigError(
                "iv_monthly_csv is required when the monthly horizon runs")
        if cfg.runs_short() and cfg.iv_short_csv is None:
            raise ConfigError(
                "iv_short_csv is required when the short horizon runs")
