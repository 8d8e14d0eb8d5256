"""Rendering of the interpolating-state figure CSV datasets to image files."""

from .recipes import RECIPES, FigureRecipe, SchemaError
from .render import render, render_all

__version__ = "0.1.0"

__all__ = ["RECIPES", "FigureRecipe", "SchemaError", "render", "render_all"]
