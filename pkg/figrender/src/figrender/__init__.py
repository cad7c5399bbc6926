"""Render multipanel relaxation figures from qsthermo CSV time series.

The renderer is coupled to the simulation package only through its
public CSV schema; it reads the per-run time series, validates the
header, and lays the observables out as a 4 x 4 panel grid (one column
per initial condition): energies, entropy rates, entropy and free
energy, and the coherence/purity/distance diagnostics.
"""

from .reader import SCHEMA, SchemaError, read_series
from .renderer import FigureSpec, PANEL_ROWS, build_figure, extract_panel_data, render

__all__ = [
    "FigureSpec",
    "PANEL_ROWS",
    "SCHEMA",
    "SchemaError",
    "build_figure",
    "extract_panel_data",
    "read_series",
    "render",
]
