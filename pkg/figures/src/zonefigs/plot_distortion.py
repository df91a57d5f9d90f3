"""Isoperimetric distortion of the union of the first k zones."""

from __future__ import annotations

import math
import sys

import matplotlib.pyplot as plt

from .common import UNRELIABLE_STYLE, FigureSpec, load_series, run

REQUIRED = ("distortion",)


def make_figure(spec: FigureSpec):
    series = load_series(spec, REQUIRED)
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.axhline(4 / math.pi, color="0.6", linewidth=1.0, linestyle="-.",
               label=f"4/pi = {4 / math.pi:.4f}")
    for i, s in enumerate(series):
        ls = "-" if i == 0 else ":"
        ax.plot(s.floats("k"), s.floats("distortion"), ls, marker=".",
                markersize=4, label=f"distortion ({s.label})")
        if s.tail:
            ax.plot(s.floats("k", s.tail), s.floats("distortion", s.tail),
                    label=f"distortion ({s.label}, unreliable)", **UNRELIABLE_STYLE)
    ax.set_xlabel("k")
    ax.set_ylabel("perimeter / equal-area circumference")
    ax.set_title("distortion of the k-disk boundary")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, ax


def main(argv=None) -> int:
    return run(make_figure, "distortion", __doc__, argv)


if __name__ == "__main__":
    sys.exit(main())
