"""End-to-end command-line behavior: manifests, gating, determinism,
stage-tagged failures, synth regeneration, and the calibrate smoke path."""

import hashlib
import json
import os
from pathlib import Path

import pytest

from volasym import __version__
from volasym.cli import cmd_synth, main

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXROOT = REPO_ROOT / "fixtures"

MONTHLY_SIGN_OUTPUTS = [
    "figures/fig4.csv", "figures/fig5.csv", "run.log",
    "tables/table1.csv", "tables/table1.json",
    "tables/table4.csv", "tables/table4.json",
]

FULL_OUTPUTS = [
    "figures/fig2.csv", "figures/fig3.csv", "figures/fig4.csv",
    "figures/fig5.csv", "figures/fig6.csv", "figures/fig7.csv", "run.log",
    "tables/table1.csv", "tables/table1.json",
    "tables/table2.csv", "tables/table2.json",
    "tables/table3.csv", "tables/table3.json",
    "tables/table4.csv", "tables/table4.json",
    "tables/table5.csv", "tables/table5.json",
]


def monthly_sign_args(out_dir):
    return ["pipeline",
            "--index-csv", str(FIXROOT / "fixture_prices.csv"),
            "--iv-monthly-csv", str(FIXROOT / "iv_monthly.csv"),
            "--horizons", "monthly", "--shock-mode", "sign",
            "--out", str(out_dir)]


def read_manifest(out_dir):
    with open(os.path.join(str(out_dir), "manifest.json"),
              encoding="utf-8") as fh:
        return json.load(fh)


def test_version_prints_package_version(capsys):
    assert main(["version"]) == 0
    out = capsys.readouterr().out
    assert out.strip() == __version__ == "0.1.0"


def test_monthly_sign_run_lists_exact_outputs(tmp_path, capsys):
    assert main(monthly_sign_args(tmp_path)) == 0
    out = capsys.readouterr().out
    assert out.startswith("manifest ")
    manifest = read_manifest(tmp_path)
    assert manifest["outputs"] == MONTHLY_SIGN_OUTPUTS
    assert manifest["schema_version"] == 1
    assert manifest["version"] == __version__
    assert len(manifest["config_hash"]) == 64
    assert sorted(manifest["input_digests"]) == ["index_csv",
                                                 "iv_monthly_csv"]
    for rel in manifest["outputs"]:
        assert (tmp_path / rel).is_file()


def test_config_file_full_run_emits_all_tables_and_figures(
        tmp_path, capsys, monkeypatch):
    # demo config paths are relative to the repository root
    monkeypatch.chdir(REPO_ROOT)
    rc = main(["pipeline", "--config", str(FIXROOT / "demo_config.json"),
               "--out", str(tmp_path)])
    assert rc == 0
    capsys.readouterr()
    manifest = read_manifest(tmp_path)
    assert manifest["outputs"] == FULL_OUTPUTS
    assert sorted(manifest["input_digests"]) == [
        "index_csv", "iv_monthly_csv", "iv_short_csv"]
    for key, name in (("index_csv", "fixture_prices.csv"),
                      ("iv_monthly_csv", "iv_monthly.csv"),
                      ("iv_short_csv", "iv_short.csv")):
        digest = hashlib.sha256((FIXROOT / name).read_bytes()).hexdigest()
        assert manifest["input_digests"][key] == digest


def test_flags_override_config_file(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(REPO_ROOT)
    rc = main(["pipeline", "--config", str(FIXROOT / "demo_config.json"),
               "--horizons", "monthly", "--shock-mode", "sign",
               "--out", str(tmp_path)])
    assert rc == 0
    capsys.readouterr()
    assert read_manifest(tmp_path)["outputs"] == MONTHLY_SIGN_OUTPUTS


def test_rerun_writes_byte_identical_outputs(tmp_path, capsys):
    dir_a = tmp_path / "a"
    dir_b = tmp_path / "b"
    assert main(monthly_sign_args(dir_a)) == 0
    assert main(monthly_sign_args(dir_b)) == 0
    capsys.readouterr()
    outputs = read_manifest(dir_a)["outputs"]
    for rel in outputs + ["manifest.json"]:
        assert (dir_a / rel).read_bytes() == (dir_b / rel).read_bytes()


def test_emit_grid_flag_adds_grid_export(tmp_path, capsys):
    assert main(monthly_sign_args(tmp_path) + ["--emit-grid"]) == 0
    capsys.readouterr()
    manifest = read_manifest(tmp_path)
    assert "figures/fig1.csv" in manifest["outputs"]
    header = (tmp_path / "figures" / "fig1.csv").read_text(
        encoding="utf-8").splitlines()[0]
    assert header == "t_date,iv,rv,r_prev,r_cur,r_last_day,label"


def test_missing_input_file_reports_ingest_stage(tmp_path, capsys):
    rc = main(["pipeline",
               "--index-csv", str(tmp_path / "absent.csv"),
               "--iv-monthly-csv", str(FIXROOT / "iv_monthly.csv"),
               "--horizons", "monthly", "--out", str(tmp_path / "out")])
    assert rc == 1
    err = capsys.readouterr().err
    assert "error in ingest stage" in err
    assert "input file not found" in err


def test_missing_required_field_reports_config_stage(tmp_path, capsys):
    rc = main(["pipeline",
               "--iv-monthly-csv", str(FIXROOT / "iv_monthly.csv"),
               "--horizons", "monthly", "--out", str(tmp_path)])
    assert rc == 1
    err = capsys.readouterr().err
    assert "error in config stage" in err
    assert "index_csv" in err


def test_missing_config_file_reports_config_stage(tmp_path, capsys):
    rc = main(["pipeline", "--config", str(tmp_path / "absent.json")])
    assert rc == 1
    err = capsys.readouterr().err
    assert "error in config stage" in err
    assert "not found" in err


def test_invalid_choice_is_rejected_by_the_parser(tmp_path, capsys):
    with pytest.raises(SystemExit):
        main(monthly_sign_args(tmp_path)[:-4] + ["--horizons", "weekly"])
    assert "invalid choice" in capsys.readouterr().err


def write_spec(path, **overrides):
    spec = {
        "name": "toy",
        "generator": {"kind": "gjr_garch", "omega": 5e-6, "alpha": 0.05,
                      "gamma": 0.1, "beta": 0.85},
        "n": 400,
        "seed": 7,
        "implied": [{"name": "toy_iv", "window": 6, "slope": 0.9,
                     "noise_sigma": 0.5, "seed": 8}],
    }
    spec.update(overrides)
    path.write_text(json.dumps(spec), encoding="utf-8")
    return str(path)


def test_synth_is_deterministic_across_runs(tmp_path, capsys):
    spec = write_spec(tmp_path / "spec.json")
    dir_a = tmp_path / "a"
    dir_b = tmp_path / "b"
    assert main(["synth", "--spec", spec, "--out", str(dir_a)]) == 0
    out = capsys.readouterr().out
    assert out.count("wrote ") == 3
    assert main(["synth", "--spec", spec, "--out", str(dir_b)]) == 0
    capsys.readouterr()
    names = ["toy_prices.csv", "toy_returns.csv", "toy_iv.csv"]
    assert sorted(p.name for p in dir_a.iterdir()) == sorted(names)
    for name in names:
        assert (dir_a / name).read_bytes() == (dir_b / name).read_bytes()


def test_synth_rejects_explosive_generator(tmp_path, capsys):
    spec = write_spec(tmp_path / "spec.json",
                      generator={"kind": "garch11", "omega": 5e-6,
                                 "alpha": 0.2, "beta": 0.85})
    assert main(["synth", "--spec", spec, "--out", str(tmp_path / "o")]) == 1
    err = capsys.readouterr().err
    assert "error in synth stage" in err
    assert "alpha + gamma/2 + beta must be < 1" in err


def test_synth_reports_missing_spec_key(tmp_path, capsys):
    spec_path = tmp_path / "spec.json"
    spec = json.loads(Path(write_spec(spec_path)).read_text(encoding="utf-8"))
    del spec["seed"]
    spec_path.write_text(json.dumps(spec), encoding="utf-8")
    assert main(["synth", "--spec", str(spec_path),
                 "--out", str(tmp_path / "o")]) == 1
    assert "synth spec missing key 'seed'" in capsys.readouterr().err


def test_synth_reports_unreadable_spec(tmp_path, capsys):
    assert main(["synth", "--spec", str(tmp_path / "absent.json"),
                 "--out", str(tmp_path / "o")]) == 1
    assert "spec file not found" in capsys.readouterr().err
    bad = tmp_path / "bad.json"
    bad.write_text("{broken", encoding="utf-8")
    assert main(["synth", "--spec", str(bad),
                 "--out", str(tmp_path / "o")]) == 1
    assert "invalid JSON" in capsys.readouterr().err


def test_committed_fixtures_regenerate_bitwise(tmp_path):
    # guards the checked-in series against drift in any generator
    written = cmd_synth(str(FIXROOT / "synth_spec.json"), str(tmp_path))
    assert len(written) == 4
    for path in written:
        name = os.path.basename(path)
        assert Path(path).read_bytes() == (FIXROOT / name).read_bytes()


def test_out_dir_env_var_is_default_only(tmp_path, capsys, monkeypatch):
    env_dir = tmp_path / "envout"
    monkeypatch.setenv("VOLASYM_OUT", str(env_dir))
    args = monthly_sign_args(tmp_path)
    rc = main(args[:-2])  # drop the --out flag pair
    assert rc == 0
    capsys.readouterr()
    assert (env_dir / "manifest.json").is_file()
    assert read_manifest(env_dir)["outputs"] == MONTHLY_SIGN_OUTPUTS


def test_calibrate_smoke_writes_summary(tmp_path, capsys):
    rc = main(["calibrate", "--suite", "adf", "--trials", "200",
               "--seed", "42", "--out", str(tmp_path)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "adf_null_size_rw250: rate 0.0500" in out
    assert "[ok]" in out
    assert "[info]" in out
    summary_path = tmp_path / "calibrate_adf.json"
    assert f"summary {summary_path}" in out
    summary = json.loads(summary_path.read_text(encoding="utf-8"))
    assert summary["suite"] == "adf"
    assert summary["passed"] is True
    checks = summary["checks"]
    assert [c["check"] for c in checks] == ["adf_null_size_rw250",
                                            "adf_power_iid500"]
    assert all(c["trials"] >= 100 for c in checks)


def test_calibrate_rejects_tiny_trial_counts(tmp_path, capsys):
    rc = main(["calibrate", "--suite", "adf", "--trials", "50",
               "--out", str(tmp_path)])
    assert rc == 1
    err = capsys.readouterr().err
    assert "error in calibrate stage" in err
    assert ">= 100 trials" in err
