"""Render aggregate CSVs into paper-style figures.

Four kinds: line-series (one line per input CSV), grouped-line (one line
per group within a single CSV), stacked-share (share_* columns stacked per
year), matrix-heatmap (annotated square matrix with labeled bins). Output
is SVG or PNG; SVG output is byte-identical across reruns for fixed inputs
(pinned hash salt, no embedded date).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

plt.rcParams["svg.hashsalt"] = "cdplots"

KINDS = ("line-series", "grouped-line", "stacked-share", "matrix-heatmap")


class MissingColumn(Exception):
    """A referenced column is absent from the input CSV."""


@dataclass
class FigureSpec:
    kind: str
    inputs: list[dict]      # per input: path, optional label/column/group_column
    out: str
    title: str = ""
    xlabel: str = "year"
    ylabel: str = ""
    style: dict = field(default_factory=dict)

    @classmethod
    def from_json(cls, path) -> "FigureSpec":
        import json
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
        unknown = set(doc) - {"kind", "inputs", "out", "title", "xlabel", "ylabel", "style"}
        if unknown:
            raise ValueError(f"unknown spec keys: {sorted(unknown)}")
        return cls(**doc)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; expected one of {KINDS}")
        if not self.inputs:
            raise ValueError("spec needs at least one input CSV")
        if Path(self.out).suffix.lower() not in (".svg", ".png"):
            raise ValueError(f"output must be .svg or .png, got {self.out!r}")


class Table:
    def __init__(self, path):
        self.path = str(path)
        with open(path, newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        if not rows:
            raise ValueError(f"{path}: empty CSV")
        self.header = rows[0]
        self.rows = rows[1:]

    def column(self, name: str) -> list[str]:
        try:
            i = self.header.index(name)
        except ValueError:
            raise MissingColumn(f"{self.path}: column {name!r} not found "
                                f"(has {self.header})") from None
        return [r[i] for r in self.rows]

    def floats(self, name: str) -> list[float | None]:
        return [float(v) if v != "" else None for v in self.column(name)]


def _new_axes(spec: FigureSpec):
    fig, ax = plt.subplots(figsize=spec.style.get("figsize", (7.0, 4.5)))
    if spec.title:
        ax.set_title(spec.title)
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    return fig, ax


def _line_series(spec: FigureSpec, ax) -> None:
    for inp in spec.inputs:
        table = Table(inp["path"])
        col = inp.get("column", "avg_cd")
        years = [int(v) for v in table.column("year")]
        values = table.floats(col)
        pts = [(y, v) for y, v in zip(years, values) if v is not None]
        label = inp.get("label") or Path(inp["path"]).stem
        ax.plot([p[0] for p in pts], [p[1] for p in pts], label=label)
    ax.legend()


def _grouped_line(spec: FigureSpec, ax) -> None:
    inp = spec.inputs[0]
    table = Table(inp["path"])
    col = inp.get("column", "avg_cd")
    group_col = inp.get("group_column", "group")
    years = [int(v) for v in table.column("year")]
    groups = table.column(group_col)
    values = table.floats(col)
    seen: dict[str, list] = {}
    for y, g, v in zip(years, groups, values):
        if v is not None:
            seen.setdefault(g, []).append((y, v))
    for g in sorted(seen):
        pts = sorted(seen[g])
        ax.plot([p[0] for p in pts], [p[1] for p in pts], label=g)
    ax.legend(title=group_col)


def _stacked_share(spec: FigureSpec, ax) -> None:
    table = Table(spec.inputs[0]["path"])
    years = [int(v) for v in table.column("year")]
    share_cols = [c for c in table.header if c.startswith("share_")]
    if not share_cols:
        raise MissingColumn(f"{table.path}: no share_* columns found "
                            f"(has {table.header})")
    series = [[v if v is not None else 0.0 for v in table.floats(c)]
              for c in share_cols]
    ax.stackplot(years, series, labels=[c.removeprefix("share_") for c in share_cols])
    ax.set_ylim(0, 1)
    ax.legend(loc="lower right", title="backward citations")


def _matrix_heatmap(spec: FigureSpec, ax, fig) -> None:
    table = Table(spec.inputs[0]["path"])
    row_labels = [r[0] for r in table.rows]
    col_labels = table.header[1:]
    data = [[float(v) for v in r[1:]] for r in table.rows]
    im = ax.imshow(data, cmap=spec.style.get("cmap", "Blues"), vmin=0.0, vmax=1.0)
    ax.set_xticks(range(len(col_labels)), col_labels)
    ax.set_yticks(range(len(row_labels)), row_labels)
    for r in range(len(row_labels)):
        for c in range(len(col_labels)):
            shade = "white" if data[r][c] > 0.6 else "black"
            ax.text(c, r, f"{data[r][c]:.2f}", ha="center", va="center", color=shade)
    fig.colorbar(im, ax=ax, shrink=0.8)


def render(spec: FigureSpec) -> Path:
    """Render the spec to its output path; never mutates the input CSVs."""
    fig, ax = _new_axes(spec)
    try:
        if spec.kind == "line-series":
            _line_series(spec, ax)
        elif spec.kind == "grouped-line":
            _grouped_line(spec, ax)
        elif spec.kind == "stacked-share":
            _stacked_share(spec, ax)
        else:
            _matrix_heatmap(spec, ax, fig)
        out = Path(spec.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        if out.suffix.lower() == ".svg":
            fig.savefig(out, format="svg", metadata={"Date": None})
        else:
            fig.savefig(out, format="png", dpi=spec.style.get("dpi", 150))
    finally:
        plt.close(fig)
    return Path(spec.out)
