"""Command-line entry point.

Subcommands: pipeline (ingest -> grids -> battery/regressions/events ->
report), synth (write deterministic synthetic series), calibrate (run a
Monte-Carlo size/power suite), version. Every failure exits nonzero with a
diagnostic naming the stage that failed.
"""

import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from volasym import __version__, calibrate
from volasym.asymmetry import cointegration_battery, run_table
from volasym.config import (
    HORIZON_CHOICES,
    SHOCK_MODE_CHOICES,
    RunConfig,
    load_config_file,
    resolve,
    validate,
)
from volasym.errors import ConfigError, InvalidSpecError, VolasymError
from volasym.eventstudy import run_figures
from volasym.ingest import CsvSchema, align, load_csv, log_returns, write_csv
from volasym.report import (
    emit_figure,
    emit_grid,
    emit_table,
    emit_table1,
    sha256_file,
    write_manifest,
    write_run_log,
)
from volasym.synth import (
    GeneratorSpec,
    generate_returns,
    make_implied_series,
    make_price_series,
)
from volasym.volatility import (
    HorizonSpec,
    VolGrid,
    build_grid,
    classify_shocks,
    grid_csv_rows,
)


class StageError(Exception):
    """Wraps a module error with the pipeline stage that raised it."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"error in {stage} stage: {cause}")
        self.stage = stage
        self.cause = cause


def _stage(stage: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except VolasymError as exc:
        raise StageError(stage, exc) from exc


def _date_or_none(text: Optional[str]):
    from datetime import date
    return date.fromisoformat(text) if text else None


def cmd_pipeline(cfg: RunConfig) -> str:
    """Run the full pipeline; returns the manifest path."""
    _stage("config", validate, cfg, require_inputs=True)
    schema = CsvSchema(date_column=cfg.date_column,
                       close_column=cfg.close_column,
                       date_format=cfg.date_format)
    start = _date_or_none(cfg.start_date)
    end = _date_or_none(cfg.end_date)

    def load(path: str, label: str):
        series = _stage("ingest", load_csv, path, schema, label)
        return series.restrict(start, end)

    index = load(cfg.index_csv, "index")
    log_lines: List[str] = [f"config_hash {cfg.config_hash()}",
                            f"index rows {len(index)}"]
    input_digests = {"index_csv": sha256_file(cfg.index_csv)}

    grids: Dict[str, VolGrid] = {}
    horizon_jobs = []
    if cfg.runs_monthly():
        horizon_jobs.append(("long", cfg.iv_monthly_csv, "iv_monthly",
                             HorizonSpec(cfg.monthly_window,
                                         cfg.annualization_days, "monthly")))
    if cfg.runs_short():
        horizon_jobs.append(("short", cfg.iv_short_csv, "iv_short",
                             HorizonSpec(cfg.short_window,
                                         cfg.annualization_days, "short")))
    for column, path, label, horizon in horizon_jobs:
        implied = load(path, label)
        input_digests[f"{label}_csv"] = sha256_file(path)
        idx_aligned, iv_aligned = _stage("align", align, index, implied)
        returns = _stage("returns", log_returns, idx_aligned)
        grid = _stage("grid", build_grid, iv_aligned, returns, horizon)
        grids[column] = grid
        log_lines.append(
            f"{column} aligned days {len(idx_aligned)} (dropped "
            f"{len(index) - len(idx_aligned)} index, "
            f"{len(implied) - len(iv_aligned)} implied)")
        log_lines.append(f"{column} grid rows {len(grid)}")

    batteries = {col: _stage("battery", cointegration_battery, grid,
                             cfg.adf_lag, cfg.bp_lag)
                 for col, grid in grids.items()}

    outputs: List[str] = []
    outputs += _stage("report", emit_table1, cfg.out_dir, batteries)

    run_percentile = cfg.shock_mode in ("percentile", "both")
    run_sign = cfg.shock_mode in ("sign", "both")
    table_jobs = []
    if run_percentile and "long" in grids:
        table_jobs += [("T2", "table2", "long"), ("T3", "table3", "long")]
    if run_sign and "long" in grids:
        table_jobs.append(("T4", "table4", "long"))
    if run_sign and "short" in grids:
        table_jobs.append(("T5", "table5", "short"))
    for table_id, file_id, column in table_jobs:
        rv_fit, iv_fit = _stage("regression", run_table, grids[column],
                                table_id, cfg.monthly_window,
                                cfg.short_window, cfg.lower_q, cfg.upper_q)
        outputs += _stage("report", emit_table, cfg.out_dir, file_id,
                          rv_fit, iv_fit)
        log_lines.append(f"{file_id} rows {rv_fit.n}")

    figure_jobs = []
    if run_percentile and "long" in grids:
        figure_jobs.append(("long", "percentile"))
    if run_sign and "long" in grids:
        figure_jobs.append(("long", "sign"))
    if run_sign and "short" in grids:
        figure_jobs.append(("short", "sign"))
    for column, kind in figure_jobs:
        grid = grids[column]
        cls = _stage("events", classify_shocks, grid, kind,
                     cfg.lower_q, cfg.upper_q)
        skipped: List[str] = []
        panels = _stage("events", run_figures, grid, cls,
                        cfg.monthly_window, cfg.short_window,
                        cfg.log_scale_figures, skipped)
        for fig_id in sorted(panels):
            panel = panels[fig_id]
            outputs += _stage("report", emit_figure, cfg.out_dir, fig_id, panel)
            log_lines.append(
                f"{fig_id} {panel.label} events {panel.n_events} "
                f"(dropped {panel.n_dropped_boundary} boundary, "
                f"{panel.n_dropped_zero} zero-level)")
        for message in skipped:
            log_lines.append(f"figure skipped: {message}")

    if cfg.emit_grid:
        column = "long" if "long" in grids else "short"
        outputs += _stage("report", emit_grid, cfg.out_dir, "fig1",
                          grid_csv_rows(grids[column]))
        log_lines.append(f"fig1 grid export ({column})")

    log_path = _stage("report", write_run_log, cfg.out_dir, log_lines)
    outputs.append(log_path)
    manifest_path = _stage("report", write_manifest, cfg.out_dir,
                           cfg.config_hash(), input_digests, outputs)
    return manifest_path


def cmd_synth(spec_path: str, out_dir: str) -> List[str]:
    """Generate deterministic synthetic series from a JSON spec file.

    Spec keys: name, generator {kind, params...}, n, seed, optional initial
    (default 100.0), optional implied: list of {name, window, slope,
    noise_sigma, seed, optional annualization_days}.
    """
    try:
        with open(spec_path, encoding="utf-8") as fh:
            spec = json.load(fh)
    except FileNotFoundError:
        raise StageError("synth", ConfigError(f"spec file not found: {spec_path}"))
    except json.JSONDecodeError as exc:
        raise StageError("synth", ConfigError(f"{spec_path}: invalid JSON: {exc}"))

    def synth_body():
        for key in ("name", "generator", "n", "seed"):
            if key not in spec:
                raise InvalidSpecError(f"synth spec missing key {key!r}")
        gen = GeneratorSpec.from_dict(spec["generator"])
        n = int(spec["n"])
        seed = int(spec["seed"])
        name = str(spec["name"])
        initial = float(spec.get("initial", 100.0))
        returns = generate_returns(gen, n, seed)

        os.makedirs(out_dir, exist_ok=True)
        written = []
        prices = make_price_series(name, returns, initial)
        price_path = os.path.join(out_dir, f"{name}_prices.csv")
        write_csv(prices, price_path)
        written.append(price_path)

        returns_path = os.path.join(out_dir, f"{name}_returns.csv")
        with open(returns_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("date,value\n")
            for d, v in zip(prices.dates[1:], returns):
                fh.write(f"{d.isoformat()},{float(v)!r}\n")
        written.append(returns_path)

        for entry in spec.get("implied", []):
            for key in ("name", "window", "slope", "noise_sigma", "seed"):
                if key not in entry:
                    raise InvalidSpecError(
                        f"implied entry missing key {key!r}")
            horizon = HorizonSpec(
                int(entry["window"]),
                int(entry.get("annualization_days", 365)))
            implied = make_implied_series(
                str(entry["name"]), returns, horizon, float(entry["slope"]),
                float(entry["noise_sigma"]), int(entry["seed"]))
            path = os.path.join(out_dir, f"{entry['name']}.csv")
            write_csv(implied, path)
            written.append(path)
        return written

    return _stage("synth", synth_body)


def cmd_calibrate(suite: str, trials: Optional[int], seed: int,
                  out_dir: str) -> Dict[str, object]:
    summary = _stage("calibrate", calibrate.run_suite, suite, trials, seed)

    def write_summary():
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, f"calibrate_{suite}.json")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(summary, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return path

    summary["summary_path"] = _stage("report", write_summary)
    return summary


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="volasym",
        description="Realized/implied volatility grid analytics pipeline")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pipeline", help="run the full analysis pipeline")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--index-csv", dest="index_csv")
    p.add_argument("--iv-monthly-csv", dest="iv_monthly_csv")
    p.add_argument("--iv-short-csv", dest="iv_short_csv")
    p.add_argument("--start", dest="start_date")
    p.add_argument("--end", dest="end_date")
    p.add_argument("--horizons", choices=HORIZON_CHOICES)
    p.add_argument("--monthly-window", dest="monthly_window", type=int)
    p.add_argument("--short-window", dest="short_window", type=int)
    p.add_argument("--annualization-days", dest="annualization_days", type=int)
    p.add_argument("--shock-mode", dest="shock_mode",
                   choices=SHOCK_MODE_CHOICES)
    p.add_argument("--lower-q", dest="lower_q", type=float)
    p.add_argument("--upper-q", dest="upper_q", type=float)
    p.add_argument("--adf-lag", dest="adf_lag", type=int)
    p.add_argument("--bp-lag", dest="bp_lag", type=int)
    p.add_argument("--out", dest="out_dir")
    p.add_argument("--seed", type=int)
    p.add_argument("--emit-grid", dest="emit_grid", action="store_const",
                   const=True)
    p.add_argument("--log-figures", dest="log_scale_figures",
                   action="store_const", const=True)
    p.add_argument("--date-column", dest="date_column")
    p.add_argument("--close-column", dest="close_column")
    p.add_argument("--date-format", dest="date_format")

    s = sub.add_parser("synth", help="write synthetic series from a spec file")
    s.add_argument("--spec", required=True)
    s.add_argument("--out", default="synth_out")

    c = sub.add_parser("calibrate", help="run a Monte-Carlo calibration suite")
    c.add_argument("--suite", required=True, choices=sorted(calibrate.SUITES))
    c.add_argument("--trials", type=int)
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--out", default="calibration")

    sub.add_parser("version", help="print the package version")
    return parser


_CONFIG_FLAGS = ("index_csv", "iv_monthly_csv", "iv_short_csv", "start_date",
                 "end_date", "horizons", "monthly_window", "short_window",
                 "annualization_days", "shock_mode", "lower_q", "upper_q",
                 "adf_lag", "bp_lag", "out_dir", "seed", "emit_grid",
                 "log_scale_figures", "date_column", "close_column",
                 "date_format")


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "version":
            print(__version__)
            return 0
        if args.command == "pipeline":
            file_values = {}
            if args.config:
                try:
                    file_values = load_config_file(args.config)
                except ConfigError as exc:
                    raise StageError("config", exc)
            overrides = {name: getattr(args, name) for name in _CONFIG_FLAGS}
            try:
                cfg = resolve(file_values, overrides)
            except ConfigError as exc:
                raise StageError("config", exc)
            manifest_path = cmd_pipeline(cfg)
            print(f"manifest {manifest_path}")
            return 0
        if args.command == "synth":
            for path in cmd_synth(args.spec, args.out):
                print(f"wrote {path}")
            return 0
        if args.command == "calibrate":
            summary = cmd_calibrate(args.suite, args.trials, args.seed,
                                    args.out)
            for check in summary["checks"]:
                band = ""
                if check["band_low"] is not None:
                    band += f" >= {check['band_low']}"
                if check["band_high"] is not None:
                    band += f" <= {check['band_high']}"
                status = ("info" if check["informational"]
                          else ("ok" if check["passed"] else "FAIL"))
                print(f"{check['check']}: rate {check['rate']:.4f} "
                      f"(se {check['binomial_se']:.4f}, n {check['trials']})"
                      f"{' band' + band if band else ''} [{status}]")
            print(f"summary {summary['summary_path']}")
            return 0 if summary["passed"] else 1
        raise ConfigError(f"unknown command {args.command!r}")
    except StageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except VolasymError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
