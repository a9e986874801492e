"""Deterministic, locale-independent number formatting for emitted artifacts."""

import math

SCI_THRESHOLD = 1e-4


def format_number(x) -> str:
    """Render a float for CSV/JSON artifacts.

    Six significant digits; scientific notation (uppercase E) below 1e-4 in
    magnitude so very small p-values stay readable. NaN/inf spelled out.
    """
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Inf" if x > 0 else "-Inf"
    if x == 0.0:
        return "0"
    if abs(x) < SCI_THRESHOLD:
        return f"{x:.5E}"
    return f"{x:.6G}"
