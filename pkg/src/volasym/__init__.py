"""Volatility asymmetry toolkit: realized-volatility grids aligned with
implied-volatility indices, level-relationship diagnostics, indicator
regressions, and shock event studies, with deterministic synthetic
generators for self-validation."""

__version__ = "0.1.0"
