"""Plots over the zones.csv exports; strictly read-only over the data."""

from .common import FigureSpec, load_series, save_figure

__all__ = ["FigureSpec", "load_series", "save_figure"]
