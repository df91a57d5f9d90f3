"""Largest chamber per zone: area and diameter against k."""

from __future__ import annotations

import sys

import matplotlib.pyplot as plt

from .common import UNRELIABLE_STYLE, FigureSpec, load_series, run

REQUIRED = ("max_chamber_area", "max_chamber_diameter")


def make_figure(spec: FigureSpec):
    series = load_series(spec, REQUIRED)
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for i, s in enumerate(series):
        ls = "-" if i == 0 else ":"
        ax.plot(s.floats("k"), s.floats("max_chamber_area"), ls, marker=".",
                markersize=4, color="C0", label=f"max area ({s.label})")
        ax.plot(s.floats("k"), s.floats("max_chamber_diameter"), ls, marker=".",
                markersize=4, color="C1", label=f"max diameter ({s.label})")
        for col, name in (("max_chamber_area", "max area"), ("max_chamber_diameter", "max diameter")):
            if s.tail:
                ax.plot(s.floats("k", s.tail), s.floats(col, s.tail),
                        label=f"{name} ({s.label}, unreliable)", **UNRELIABLE_STYLE)
    ax.set_xlabel("k")
    ax.set_ylabel("size of the largest chamber")
    ax.set_title("largest chamber per zone")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, ax


def main(argv=None) -> int:
    return run(make_figure, "maxsize", __doc__, argv)


if __name__ == "__main__":
    sys.exit(main())
