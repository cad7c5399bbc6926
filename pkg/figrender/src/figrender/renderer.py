"""4 x 4 multipanel layout of the relaxation observables.

Rows: energies (total, potential, kinetic, modified kinetic); entropy
rates (total, flow, production); entropy and free energy; coherence,
purity and distance to equilibrium.  Columns: one per initial-condition
CSV.  Baseline series, when given, are drawn dashed on the same axes.
Horizontal reference lines mark kB T / 2 and the closed-form asymptotes
of the preset.
"""

import math
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .reader import read_series

PANEL_ROWS = (
    ("energies", ("e_total", "e_pot", "e_kin", "e_kin_mod")),
    ("entropy rates", ("entropy_rate", "entropy_flow_rate", "entropy_production_rate")),
    ("entropy / free energy", ("entropy", "free_energy")),
    ("coherence / purity / distance", ("coherence", "purity", "distance")),
)


def _boltzmann_asymptotes(level_energies):
    weights = np.exp(-level_energies)
    z = weights.sum()
    return float((level_energies * weights).sum() / z), float(-math.log(z))


def _preset_references(preset):
    """Horizontal reference values per panel row, natural units kB = T = 1."""
    if preset == "fig1":
        # oscillator, hbar = omega = 1
        e_eq = 0.5 + 1.0 / (math.e - 1.0)
        f_eq = 0.5 + math.log(1.0 - math.exp(-1.0))
        half = 0.25 + 0.5 / (math.e - 1.0)
        return {0: (0.5, e_eq, half), 2: (f_eq,)}
    if preset == "fig2":
        # infinite well, m = 3, L = 2: E_n = pi^2 n^2 / 24
        n = np.arange(1, 200)
        e_eq, f_eq = _boltzmann_asymptotes(math.pi**2 * n**2 / 24.0)
        return {0: (0.5, e_eq), 2: (f_eq,)}
    return {}


@dataclass
class FigureSpec:
    csv_paths: list
    output_path: str
    baseline_paths: list = field(default_factory=list)
    preset: str = ""
    column_labels: list = field(default_factory=list)

    def __post_init__(self):
        if not self.csv_paths:
            raise ValueError("at least one CSV path is required")
        if self.baseline_paths and len(self.baseline_paths) != len(self.csv_paths):
            raise ValueError(
                f"{len(self.baseline_paths)} baseline CSVs for "
                f"{len(self.csv_paths)} main CSVs"
            )


def extract_panel_data(spec):
    """Parse and arrange exactly the arrays the panels will plot.

    Returns a list of columns; each column is a dict with 't', one
    entry per panel row holding {column_name: array}, and the same for
    the baseline if present.  This is the pure, byte-independent test
    surface of the renderer.
    """
    main = [read_series(p) for p in spec.csv_paths]
    base = [read_series(p) for p in spec.baseline_paths] if spec.baseline_paths else []

    lengths = {s["t"].size for s in main + base}
    if len(lengths) != 1:
        raise ValueError(f"CSV row counts differ across the figure: {sorted(lengths)}")

    columns = []
    for k, series in enumerate(main):
        entry = {"t": series["t"], "rows": [], "baseline_rows": []}
        for _, names in PANEL_ROWS:
            entry["rows"].append({name: series[name] for name in names})
            if base:
                entry["baseline_rows"].append({name: base[k][name] for name in names})
        columns.append(entry)
    return columns


def build_figure(spec):
    """Assemble the matplotlib figure; returns (figure, extracted data)."""
    columns = extract_panel_data(spec)
    n_cols = len(columns)
    references = _preset_references(spec.preset)

    fig, axes = plt.subplots(
        len(PANEL_ROWS), n_cols,
        figsize=(3.4 * n_cols, 9.5),
        squeeze=False,
        sharex="col",
    )
    for col, entry in enumerate(columns):
        t = entry["t"]
        for row, (title, names) in enumerate(PANEL_ROWS):
            ax = axes[row][col]
            for name in names:
                ax.plot(t, entry["rows"][row][name], label=name, linewidth=1.2)
            if entry["baseline_rows"]:
                for name in names:
                    ax.plot(t, entry["baseline_rows"][row][name],
                            linestyle="--", linewidth=1.0, alpha=0.8)
            for ref in references.get(row, ()):
                ax.axhline(ref, color="gray", linewidth=0.7, linestyle=":")
            if col == 0:
                ax.set_ylabel(title, fontsize=8)
            if row == 0:
                label = (spec.column_labels[col]
                         if col < len(spec.column_labels) else f"run {col + 1}")
                ax.set_title(label, fontsize=9)
            if row == len(PANEL_ROWS) - 1:
                ax.set_xlabel("t", fontsize=8)
            ax.tick_params(labelsize=7)
            if row == 0 and col == 0:
                ax.legend(fontsize=6)
            if row == 1 and col == 0:
                ax.legend(fontsize=6)
    fig.tight_layout()
    return fig, columns


def render(spec):
    """Write the figure image and return the path."""
    fig, _ = build_figure(spec)
    fig.savefig(spec.output_path, dpi=150)
    plt.close(fig)
    return spec.output_path
