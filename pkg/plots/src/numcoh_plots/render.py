"""Renderers: one image per input CSV, deterministic given fixed inputs."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .recipes import RECIPES, FigureRecipe, SchemaError, load_table, raster_axes  # noqa: E402

_FIGSIZE = (6.0, 4.5)
_DPI = 110
_CONTOUR_LEVELS = 10  # evenly spaced between 0 and the panel maximum


def _new_axes(recipe: FigureRecipe, projection=None):
    fig = plt.figure(figsize=_FIGSIZE, dpi=_DPI)
    ax = fig.add_subplot(111, projection=projection)
    ax.set_xlabel(recipe.xlabel)
    ax.set_ylabel(recipe.ylabel)
    return fig, ax


def _render_line(recipe, path, out_file):
    # expected_columns is None for sets whose panels carry different series
    header, data = load_table(path, recipe.expected_columns)
    fig, ax = _new_axes(recipe)
    for col in range(1, data.shape[1]):
        ax.plot(data[:, 0], data[:, col], linewidth=1.0, label=header[col])
    if recipe.xlim:
        ax.set_xlim(*recipe.xlim)
    if recipe.ylim:
        ax.set_ylim(*recipe.ylim)
    if data.shape[1] > 2:
        ax.legend(loc="best", fontsize=8)
    ax.set_title(path.stem)
    fig.savefig(out_file)
    plt.close(fig)


def _render_contour(recipe, path, out_file):
    _, data = load_table(path, recipe.expected_columns)
    xs, ys, values = raster_axes(data, path.name)
    top = float(values.max())
    if top <= 0.0:
        raise SchemaError(f"{path.name}: contour panel has no positive values")
    levels = np.linspace(0.0, top, _CONTOUR_LEVELS + 1)[1:]
    fig, ax = _new_axes(recipe)
    ax.contour(xs, ys, values.T, levels=levels, linewidths=0.8)
    ax.set_aspect("equal")
    ax.set_title(path.stem)
    fig.savefig(out_file)
    plt.close(fig)


def _render_surface(recipe, path, out_file):
    _, data = load_table(path, recipe.expected_columns)
    xs, ys, values = raster_axes(data, path.name)
    fig, ax = _new_axes(recipe, projection="3d")
    mesh_x, mesh_y = np.meshgrid(xs, ys, indexing="ij")
    ax.plot_surface(mesh_x, mesh_y, values, cmap="viridis", linewidth=0.0, antialiased=True)
    ax.set_title(path.stem)
    fig.savefig(out_file)
    plt.close(fig)


def _render_stem(recipe, path, out_file):
    _, data = load_table(path, recipe.expected_columns)
    fig, ax = _new_axes(recipe)
    ax.bar(data[:, 0], data[:, 1], width=0.8)
    ax.set_xlim(data[0, 0] - 0.5, data[-1, 0] + 0.5)
    ax.set_title(path.stem)
    fig.savefig(out_file)
    plt.close(fig)


_RENDERERS = {
    "line": _render_line,
    "contour": _render_contour,
    "surface": _render_surface,
    "stem": _render_stem,
}


def render(recipe: FigureRecipe, in_dir: Path, out_dir: Path, image_format: str = "png") -> list[Path]:
    """Render every sub-panel of one figure set; returns the written image paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    renderer = _RENDERERS[recipe.kind]
    written = []
    for name in recipe.inputs:
        src = in_dir / name
        out_file = out_dir / (Path(name).stem + f".{image_format}")
        renderer(recipe, src, out_file)
        written.append(out_file)
    return written


def render_all(in_dir: Path, out_dir: Path, image_format: str = "png") -> list[Path]:
    """Render all nine figure sets from a directory of generated CSVs."""
    written = []
    for fig_id in sorted(RECIPES):
        written.extend(render(RECIPES[fig_id], in_dir, out_dir, image_format))
    return written
