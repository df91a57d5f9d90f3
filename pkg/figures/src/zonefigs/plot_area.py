"""Per-zone area against k (the unperturbed lattice sits on the constant 1)."""

from __future__ import annotations

import sys

import matplotlib.pyplot as plt

from .common import BOUND_STYLE, UNRELIABLE_STYLE, FigureSpec, load_series, run

REQUIRED = ("area_float",)


def make_figure(spec: FigureSpec):
    series = load_series(spec, REQUIRED)
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    ax.axhline(1.0, label="area 1", **BOUND_STYLE)
    for i, s in enumerate(series):
        ls = "-" if i == 0 else ":"
        ax.plot(s.floats("k"), s.floats("area_float"), ls, marker=".",
                markersize=4, label=f"area ({s.label})")
        if s.tail:
            ax.plot(s.floats("k", s.tail), s.floats("area_float", s.tail),
                    label=f"area ({s.label}, unreliable)", **UNRELIABLE_STYLE)
    ax.set_xlabel("k")
    ax.set_ylabel("zone area")
    ax.set_title("area of the k-th zone")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, ax


def main(argv=None) -> int:
    return run(make_figure, "area", __doc__, argv)


if __name__ == "__main__":
    sys.exit(main())
