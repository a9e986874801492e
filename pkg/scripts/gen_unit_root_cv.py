"""Generate src/volasym/_unit_root_cv.py: the Dickey-Fuller tau critical-value
surface used for ADF p-values.

Method: for each regression case ("none", "intercept") and each sample size in
T_GRID, simulate the lag-0 Dickey-Fuller t-ratio on driftless Gaussian random
walks and record the empirical quantiles at the PROBS ladder (200k replications
for T <= 500, tapering to 60k at T = 2500, quantile standard errors well under
0.005 t-units near the 5% level). At runtime the surface is interpolated
linearly in 1/T between rows and linearly in tau between ladder points.

Before writing, the script cross-checks the largest-T row against the published
asymptotic 1/5/10% critical values (none: -2.566/-1.941/-1.617; intercept:
-3.430/-2.861/-2.567) and aborts on disagreement beyond MC tolerance, so a
regeneration can never silently corrupt the test.

Run from the repository root:  python3 scripts/gen_unit_root_cv.py
Uses numpy's own RNG: the table is calibration data, not part of the portable
stream protocol, and the generation seed is fixed for reproducibility.
"""

import pathlib
import time

import numpy as np

PROBS = (0.001, 0.005, 0.01, 0.02, 0.025, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08,
         0.09, 0.10, 0.125, 0.15, 0.20, 0.25, 0.30, 0.40, 0.50, 0.60, 0.70,
         0.80, 0.90, 0.95, 0.975, 0.99, 0.999)
T_GRID = (25, 50, 100, 150, 200, 250, 300, 400, 500, 750, 1000, 1500, 2500)
SEED = 987654321

ASYMPTOTIC_ANCHORS = {
    "none": {0.01: -2.566, 0.05: -1.941, 0.10: -1.617},
    "intercept": {0.01: -3.430, 0.05: -2.861, 0.10: -2.567},
}
ANCHOR_TOL = 0.025


def reps_for(t: int) -> int:
    if t <= 500:
        return 200_000
    if t <= 1000:
        return 120_000
    if t <= 1500:
        return 80_000
    return 60_000


def tau_batch(rng: np.random.Generator, t: int, n: int, case: str) -> np.ndarray:
    """Dickey-Fuller t-ratios for n driftless random walks with t regression rows."""
    eps = rng.standard_normal((n, t + 1))
    x = np.cumsum(eps, axis=1)
    xl = x[:, :-1]
    dx = eps[:, 1:]
    if case == "intercept":
        xl = xl - xl.mean(axis=1, keepdims=True)
        dx = dx - dx.mean(axis=1, keepdims=True)
        dof = t - 2
    else:
        dof = t - 1
    den = np.einsum("ij,ij->i", xl, xl)
    num = np.einsum("ij,ij->i", xl, dx)
    gam = num / den
    resid = dx - gam[:, None] * xl
    s2 = np.einsum("ij,ij->i", resid, resid) / dof
    return gam / np.sqrt(s2 / den)


def main():
    rng = np.random.default_rng(SEED)
    table = {}
    t0 = time.monotonic()
    for case in ("none", "intercept"):
        rows = []
        for t in T_GRID:
            total = reps_for(t)
            chunk = max(1000, int(2.0e7 / (t + 1)))
            taus = np.empty(total)
            done = 0
            while done < total:
                n = min(chunk, total - done)
                taus[done:done + n] = tau_batch(rng, t, n, case)
                done += n
            rows.append(tuple(float(v) for v in np.quantile(taus, PROBS)))
            print(f"{case:9s} T={t:5d} reps={total} 5%={rows[-1][PROBS.index(0.05)]:.4f} "
                  f"[{time.monotonic() - t0:.0f}s]")
        table[case] = tuple(rows)

    for case, anchors in ASYMPTOTIC_ANCHORS.items():
        top = table[case][-1]
        for p, ref in anchors.items():
            got = top[PROBS.index(p)]
            if abs(got - ref) > ANCHOR_TOL:
                raise SystemExit(
                    f"anchor check failed: {case} {p:.0%} got {got:.4f}, "
                    f"published asymptotic {ref:.4f}")
            print(f"anchor ok: {case} {p:.0%} {got:.4f} vs {ref:.4f}")

    out = pathlib.Path(__file__).resolve().parents[1] / "src" / "volasym" / "_unit_root_cv.py"
    lines = [
        '"""Dickey-Fuller tau quantile surface (generated by scripts/gen_unit_root_cv.py).',
        "",
        "Monte-Carlo calibrated; largest-T row verified against published asymptotic",
        "critical values at generation time. Do not edit by hand.",
        '"""',
        "",
        f"PROBS = {PROBS!r}",
        "",
        f"T_GRID = {T_GRID!r}",
        "",
        "TABLE = {",
    ]
    for case in ("none", "intercept"):
        lines.append(f"    {case!r}: (")
        for row in table[case]:
            lines.append(f"        {row!r},")
        lines.append("    ),")
    lines.append("}")
    lines.append("")
    lines.append(f"GENERATION = {{'seed': {SEED}, 'reps': {{t: reps for t, reps in zip({T_GRID!r}, {tuple(reps_for(t) for t in T_GRID)!r})}}}}")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
