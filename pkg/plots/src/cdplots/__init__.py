"""Figure rendering for cdgraph aggregate CSVs."""

__version__ = "0.1.0"

from .figures import FigureSpec, MissingColumn, render, KINDS

__all__ = ["FigureSpec", "MissingColumn", "render", "KINDS"]
