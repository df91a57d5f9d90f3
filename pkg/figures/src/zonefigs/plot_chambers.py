"""Chamber counts per zone, with the 6k-6 line and the cumulative bound."""

from __future__ import annotations

import itertools
import sys

import matplotlib.pyplot as plt

from .common import BOUND_STYLE, UNRELIABLE_STYLE, FigureSpec, load_series, run

REQUIRED = ("n_chambers",)


def make_figure(spec: FigureSpec):
    series = load_series(spec, REQUIRED)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    kmax = 1
    for i, s in enumerate(series):
        ls = "-" if i == 0 else ":"
        ks = s.floats("k")
        counts = s.floats("n_chambers")
        ax.plot(ks, counts, ls, marker=".", markersize=4, label=f"chambers ({s.label})")
        all_counts = counts + s.floats("n_chambers", s.unreliable)
        cum = list(itertools.accumulate(all_counts))
        ax.plot(ks, cum[: len(ks)], ls, marker=".", markersize=4, color="C2",
                label=f"cumulative ({s.label})")
        if s.tail:
            ax.plot(s.floats("k", s.tail), s.floats("n_chambers", s.tail),
                    label=f"chambers ({s.label}, unreliable)", **UNRELIABLE_STYLE)
            joined = cum[len(ks) - 1 :] if ks else cum
            ax.plot(s.floats("k", s.tail), joined,
                    label=f"cumulative ({s.label}, unreliable)", **UNRELIABLE_STYLE)
        kmax = max(kmax, int(max(s.floats("k", s.rows + s.unreliable))))
    ks_ref = list(range(2, kmax + 1))
    ax.plot(ks_ref, [6 * k - 6 for k in ks_ref], label="6k-6", **BOUND_STYLE)
    ks_ref = list(range(1, kmax + 1))
    ax.plot(ks_ref, [3 * k * k - 3 * k + 1 for k in ks_ref],
            linestyle="--", label="3k^2-3k+1", **BOUND_STYLE)
    ax.set_xlabel("k")
    ax.set_ylabel("chambers")
    ax.set_title("chambers per zone and cumulative")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, ax


def main(argv=None) -> int:
    return run(make_figure, "chambers", __doc__, argv)


if __name__ == "__main__":
    sys.exit(main())
