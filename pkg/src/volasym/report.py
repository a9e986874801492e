"""Deterministic result serialization: per-table CSV+JSON, per-figure CSV,
a content manifest, and a plain-text run log.

Every writer uses fixed column order, LF newlines, the shared numeric
formatter, and no timestamps, so identical inputs reproduce byte-identical
files.
"""

import hashlib
import json
import math
import os
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from volasym import __version__
from volasym.asymmetry import COLUMN_NAMES, CointegrationReport
from volasym.errors import IncompleteResultError
from volasym.eventstudy import STEP_LABELS, EventPanel
from volasym.formatting import format_number
from volasym.stats import RegressionResult
from volasym.volatility import GRID_CSV_HEADER

SCHEMA_VERSION = 1

TABLE1_TESTS = (("t-test", "residual_t"), ("Box-Pierce", "residual_bp"),
                ("ADF", "residual_adf"))
HORIZON_COLUMNS = ("short", "long")


def _sanitize(obj):
    """JSON-safe copy: NaN and infinities become null."""
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if hasattr(obj, "item") and not isinstance(obj, (str, bytes)):
        return _sanitize(obj.item())
    return obj


def _write_text(path: str, text: str) -> None:
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _write_json(path: str, payload) -> None:
    body = json.dumps(_sanitize(payload), indent=2, sort_keys=True,
                      allow_nan=False)
    _write_text(path, body + "\n")


def _csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(
            cell if isinstance(cell, str) else format_number(float(cell))
            for cell in row))
    return "\n".join(lines) + "\n"


def sha256_file(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def emit_table1(out_dir: str,
                batteries: Mapping[str, CointegrationReport]) -> List[str]:
    """Battery report: CSV of residual-test p-values (rows) by horizon
    (columns, short then long, only horizons actually run); full numbers in
    the JSON twin."""
    unknown = set(batteries) - set(HORIZON_COLUMNS)
    if unknown:
        raise IncompleteResultError(
            f"unknown horizon key(s) {sorted(unknown)}; expected "
            f"{HORIZON_COLUMNS}")
    present = [h for h in HORIZON_COLUMNS if h in batteries]
    if not present:
        raise IncompleteResultError("battery report has no horizon results")
    rows = []
    for test_label, attr in TABLE1_TESTS:
        row: List = [test_label]
        for h in present:
            row.append(getattr(batteries[h], attr).p_value)
        rows.append(row)
    csv_path = os.path.join(out_dir, "tables", "table1.csv")
    _write_text(csv_path, _csv_text(["test"] + present, rows))
    json_path = os.path.join(out_dir, "tables", "table1.json")
    _write_json(json_path, {
        "schema_version": SCHEMA_VERSION,
        "table": "table1",
        "batteries": {h: batteries[h].to_dict() for h in present},
    })
    return [csv_path, json_path]


def _regression_dict(fit: RegressionResult) -> Dict[str, object]:
    return {
        "column_names": list(fit.column_names),
        "coef": [float(v) for v in fit.coef],
        "se": [float(v) for v in fit.se],
        "t_stat": [float(v) for v in fit.t_stat],
        "p_value": [float(v) for v in fit.p_value],
        "n": fit.n,
        "k": fit.k,
        "r2": fit.r2,
        "aic": fit.aic,
        "bic": fit.bic,
    }


def emit_table(out_dir: str, table_id: str, rv_fit: Optional[RegressionResult],
               iv_fit: Optional[RegressionResult]) -> List[str]:
    """One regression table (table2..table5): CSV rows are the five design
    coefficients, columns interleave coefficient and p-value for the
    realized-target and implied-target fits."""
    if rv_fit is None or iv_fit is None:
        raise IncompleteResultError(
            f"{table_id} needs both target fits (rv and iv)")
    for fit in (rv_fit, iv_fit):
        if tuple(fit.column_names) != COLUMN_NAMES:
            raise IncompleteResultError(
                f"{table_id}: unexpected design columns {fit.column_names}")
    rows = []
    for i, name in enumerate(COLUMN_NAMES):
        rows.append([name, float(rv_fit.coef[i]), float(rv_fit.p_value[i]),
                     float(iv_fit.coef[i]), float(iv_fit.p_value[i])])
    csv_path = os.path.join(out_dir, "tables", f"{table_id}.csv")
    _write_text(csv_path, _csv_text(
        ["variable", "rv_coef", "rv_p", "iv_coef", "iv_p"], rows))
    json_path = os.path.join(out_dir, "tables", f"{table_id}.json")
    _write_json(json_path, {
        "schema_version": SCHEMA_VERSION,
        "table": table_id,
        "rv": _regression_dict(rv_fit),
        "iv": _regression_dict(iv_fit),
    })
    return [csv_path, json_path]


def emit_figure(out_dir: str, figure_id: str, panel: EventPanel) -> List[str]:
    """Four-row per-step CSV of one event panel."""
    rows = []
    for s, step in enumerate(STEP_LABELS):
        rows.append([step, float(panel.mean_cum_iv[s]),
                     float(panel.mean_cum_rv[s]), float(panel.diff[s]),
                     float(panel.diff_p[s]), panel.n_events])
    csv_path = os.path.join(out_dir, "figures", f"{figure_id}.csv")
    _write_text(csv_path, _csv_text(
        ["step", "mean_cum_iv", "mean_cum_rv", "diff", "diff_p", "n_events"],
        rows))
    return [csv_path]


def emit_grid(out_dir: str, figure_id: str,
              grid_rows: Sequence[Sequence]) -> List[str]:
    """Raw grid export (the optional first figure)."""
    csv_path = os.path.join(out_dir, "figures", f"{figure_id}.csv")
    _write_text(csv_path, _csv_text(GRID_CSV_HEADER, grid_rows))
    return [csv_path]


def write_run_log(out_dir: str, lines: Sequence[str]) -> str:
    path = os.path.join(out_dir, "run.log")
    _write_text(path, "\n".join(lines) + "\n")
    return path


def write_manifest(out_dir: str, config_hash: str,
                   input_digests: Mapping[str, str],
                   output_paths: Sequence[str]) -> str:
    """Manifest of everything the run produced; paths are relative to the
    run directory and sorted for stability."""
    rel = sorted(os.path.relpath(p, out_dir).replace(os.sep, "/")
                 for p in output_paths)
    path = os.path.join(out_dir, "manifest.json")
    _write_json(path, {
        "schema_version": SCHEMA_VERSION,
        "version": __version__,
        "config_hash": config_hash,
        "input_digests": dict(sorted(input_digests.items())),
        "outputs": rel,
    })
    return path
