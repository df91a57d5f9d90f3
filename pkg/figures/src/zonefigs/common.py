"""Shared plumbing: CSV loading, reliability filtering, argument parsing.

Data series are plotted verbatim from the CSV floats; this layer never
recomputes geometry.  Rows flagged reliable=0 are refused unless the caller
passes --include-unreliable, in which case they render dashed and greyed.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  backend must be fixed first

UNRELIABLE_STYLE = {"color": "0.65", "linestyle": "--", "linewidth": 1.2}
BOUND_STYLE = {"color": "0.75", "linewidth": 1.0}


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    csv_paths: tuple[str, ...]
    out_path: str
    include_unreliable: bool = False
    tau: float | None = None


@dataclass(frozen=True)
class Series:
    """One zones.csv, rows split by the reliability flag (raw strings kept)."""

    label: str
    rows: tuple[dict[str, str], ...]
    unreliable: tuple[dict[str, str], ...]

    def floats(self, column: str, rows: tuple[dict[str, str], ...] | None = None) -> list[float]:
        return [float(r[column]) for r in (self.rows if rows is None else rows)]

    @property
    def tail(self) -> tuple[dict[str, str], ...]:
        """Unreliable rows joined to the last reliable one, so the dashed
        continuation connects to the solid curve."""
        if self.unreliable and self.rows:
            return (self.rows[-1],) + self.unreliable
        return self.unreliable


def load_series(spec: FigureSpec, required: tuple[str, ...]) -> list[Series]:
    need = set(required) | {"k", "reliable"}
    out = []
    for path in spec.csv_paths:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            have = set(reader.fieldnames or ())
            missing = sorted(need - have)
            if missing:
                raise SystemExit(f"{path}: missing columns: {', '.join(missing)}")
            rows = list(reader)
        if not rows:
            raise SystemExit(f"{path}: no data rows")
        reliable = tuple(r for r in rows if r["reliable"] == "1")
        flagged = tuple(r for r in rows if r["reliable"] != "1")
        if flagged and not spec.include_unreliable:
            print(
                f"{path}: skipping {len(flagged)} unreliable rows "
                "(pass --include-unreliable to render them)",
                file=sys.stderr,
            )
            flagged = ()
        if not reliable and not flagged:
            raise SystemExit(f"{path}: no plottable rows")
        out.append(Series(label=Path(path).stem, rows=reliable, unreliable=flagged))
    return out


def save_figure(fig, out_path: str) -> list[str]:
    """Write the raster image plus a vector sibling (png <-> pdf)."""
    p = Path(out_path)
    if p.parent != Path(""):
        p.parent.mkdir(parents=True, exist_ok=True)
    sibling = p.with_suffix(".png" if p.suffix == ".pdf" else ".pdf")
    fig.savefig(p, dpi=160)
    fig.savefig(sibling)
    return [str(p), str(sibling)]


def base_parser(figure_id: str, description: str) -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog=f"plot_{figure_id}", description=description)
    ap.add_argument("csvs", nargs="+", help="zones.csv exports; the first is drawn solid, later ones dotted")
    ap.add_argument("--out", default=f"{figure_id}.png", help="output image path (a pdf/png sibling is written too)")
    ap.add_argument(
        "--include-unreliable",
        action="store_true",
        help="render rows flagged reliable=0 (dashed, greyed)",
    )
    return ap


def spec_from_args(figure_id: str, args: argparse.Namespace) -> FigureSpec:
    return FigureSpec(
        figure_id=figure_id,
        csv_paths=tuple(args.csvs),
        out_path=args.out,
        include_unreliable=args.include_unreliable,
        tau=getattr(args, "tau", None),
    )


def run(make_figure, figure_id: str, description: str, argv=None, extra_args=None) -> int:
    ap = base_parser(figure_id, description)
    if extra_args:
        extra_args(ap)
    args = ap.parse_args(argv)
    spec = spec_from_args(figure_id, args)
    fig, _ = make_figure(spec)
    for path in save_figure(fig, spec.out_path):
        print(f"wrote {path}")
    plt.close(fig)
    return 0
