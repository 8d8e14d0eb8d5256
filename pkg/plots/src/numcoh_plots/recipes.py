"""Figure recipes: the documented CSV files each figure set consists of.

This package talks to the dataset generator only through its CSV contract;
the file names and column schemas below mirror the generator's documented
output exactly.  Any deviation aborts with a SchemaError naming the problem.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

PI = math.pi


class SchemaError(Exception):
    """An input CSV is missing, empty, or does not match its documented schema."""


@dataclass(frozen=True)
class FigureRecipe:
    """One figure set: its input files, plot kind and axis dressing."""

    figure_id: str
    inputs: tuple[str, ...]
    kind: str  # "line" | "contour" | "surface" | "stem"
    xlabel: str
    ylabel: str
    xlim: tuple[float, float] | None = None
    ylim: tuple[float, float] | None = None
    expected_columns: tuple[str, ...] | None = None  # None: first column + any series


def _eta_tags(etas):
    return tuple(f"eta{eta:g}" for eta in etas)


_SNAPSHOT_TAGS = ("tau0", "taupi4", "taupi2", "tau3pi4", "taupi")
_FIG9_TAGS = _SNAPSHOT_TAGS + ("taupi4shift", "tau3pi4shift")

RECIPES: dict[str, FigureRecipe] = {
    "fig1": FigureRecipe(
        figure_id="fig1",
        inputs=("fig1.csv",),
        kind="line",
        xlabel="eta",
        ylabel="Mandel Q",
        xlim=(0.0, 1.0),
        ylim=(-1.0, 0.0),
        expected_columns=("eta", "q_m2", "q_m50", "q_m100", "q_binomial"),
    ),
    "fig2": FigureRecipe(
        figure_id="fig2",
        inputs=("fig2.csv",),
        kind="line",
        xlabel="eta",
        ylabel="quadrature variance",
        xlim=(0.0, 1.0),
        expected_columns=("eta", "var_x_m2", "var_x_m20", "var_x_m50", "var_x_m200"),
    ),
    "fig3": FigureRecipe(
        figure_id="fig3",
        inputs=("fig3a.csv", "fig3b.csv"),
        kind="line",
        xlabel="eta",
        ylabel="signal-to-noise ratio",
        xlim=(0.0, 1.0),
    ),
    "fig4": FigureRecipe(
        figure_id="fig4",
        inputs=tuple(f"fig4_{tag}.csv" for tag in _eta_tags((0.1, 0.4, 0.7, 1.0)) + ("vacuum",)),
        kind="surface",
        xlabel="x",
        ylabel="y",
        expected_columns=("x", "y", "value"),
    ),
    "fig5": FigureRecipe(
        figure_id="fig5",
        inputs=tuple(
            f"fig5_{tag}.csv" for tag in _eta_tags((0.05, 0.2, 0.4, 0.6, 0.8, 0.95))
        ),
        kind="contour",
        xlabel="x",
        ylabel="y",
        expected_columns=("x", "y", "value"),
    ),
    "fig6": FigureRecipe(
        figure_id="fig6",
        inputs=("fig6a.csv", "fig6b.csv", "fig6c.csv", "fig6d.csv"),
        kind="line",
        xlabel="tau",
        ylabel="inversion",
        xlim=(0.0, PI),
        ylim=(-1.05, 1.05),
        expected_columns=("tau", "inversion"),
    ),
    "fig7": FigureRecipe(
        figure_id="fig7",
        inputs=("fig7a.csv", "fig7b.csv", "fig7c.csv", "fig7d.csv"),
        kind="line",
        xlabel="tau",
        ylabel="entropy",
        xlim=(0.0, PI),
        expected_columns=("tau", "entropy"),
    ),
    "fig8": FigureRecipe(
        figure_id="fig8",
        inputs=tuple(
            f"fig8_{eta_tag}_{tag}.csv"
            for eta_tag in _eta_tags((0.1, 0.8))
            for tag in _SNAPSHOT_TAGS
        ),
        kind="contour",
        xlabel="x",
        ylabel="y",
        expected_columns=("x", "y", "q"),
    ),
    "fig9": FigureRecipe(
        figure_id="fig9",
        inputs=tuple(
            f"fig9_{eta_tag}_{tag}.csv"
            for eta_tag in _eta_tags((0.1, 0.8))
            for tag in _FIG9_TAGS
        ),
        kind="stem",
        xlabel="n",
        ylabel="probability",
        expected_columns=("n", "p_n"),
    ),
}


def load_table(path: Path, expected_columns: tuple[str, ...] | None = None):
    """Read a CSV into (header, float matrix), enforcing the documented schema."""
    if not path.exists():
        raise SchemaError(f"missing input file: {path}")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path.name}: file is empty") from None
        rows = list(reader)
    if expected_columns is not None:
        missing = [c for c in expected_columns if c not in header]
        if missing:
            raise SchemaError(f"{path.name}: missing column(s) {', '.join(missing)}")
        if list(header) != list(expected_columns):
            raise SchemaError(
                f"{path.name}: columns {header} do not match schema {list(expected_columns)}"
            )
    if len(header) < 2:
        raise SchemaError(f"{path.name}: need at least two columns, found {header}")
    if not rows:
        raise SchemaError(f"{path.name}: no data rows")
    try:
        data = np.array([[float(v) for v in row] for row in rows])
    except ValueError as exc:
        raise SchemaError(f"{path.name}: non-numeric cell ({exc})") from exc
    if data.shape[1] != len(header):
        raise SchemaError(f"{path.name}: ragged rows")
    return header, data


def raster_axes(data: np.ndarray, name: str):
    """Recover the (xs, ys, value grid) of a row-major x,y,value raster."""
    xs = np.unique(data[:, 0])
    ys = np.unique(data[:, 1])
    if xs.size * ys.size != data.shape[0]:
        raise SchemaError(f"{name}: rows do not form a complete rectangular grid")
    values = data[:, 2].reshape(xs.size, ys.size)
    return xs, ys, values
