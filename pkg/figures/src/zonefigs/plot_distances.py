"""Inner and outer zone distances r_k, R_k with their bound envelopes."""

from __future__ import annotations

import math
import sys

import matplotlib.pyplot as plt

from .common import BOUND_STYLE, UNRELIABLE_STYLE, FigureSpec, load_series, run

REQUIRED = ("r", "R")

SQRT2_HALF = math.sqrt(2) / 2


def _envelopes(ax, kmax: int, tau: float | None) -> None:
    ks = [1 + i / 8 for i in range(8 * (kmax - 1) + 1)]
    rho = [math.sqrt(k / math.pi) for k in ks]
    ax.plot(ks, [v - SQRT2_HALF for v in rho], label="bound envelopes", **BOUND_STYLE)
    ax.plot(ks, [math.sqrt((k - 1) / math.pi) for k in ks], label="_nolegend_", **BOUND_STYLE)
    ax.plot(ks, rho, label="_nolegend_", **BOUND_STYLE)
    ax.plot(ks, [v + SQRT2_HALF for v in rho], label="_nolegend_", **BOUND_STYLE)
    if tau:
        ax.plot(ks, [v - SQRT2_HALF - tau for v in rho],
                label=f"envelopes widened by tau={tau:g}", linestyle="--", **BOUND_STYLE)
        ax.plot(ks, [v + SQRT2_HALF + tau for v in rho], label="_nolegend_",
                linestyle="--", **BOUND_STYLE)


def make_figure(spec: FigureSpec):
    series = load_series(spec, REQUIRED)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    kmax = 1
    for i, s in enumerate(series):
        ls = "-" if i == 0 else ":"
        ax.plot(s.floats("k"), s.floats("r"), ls, color="C0", label=f"r ({s.label})")
        ax.plot(s.floats("k"), s.floats("R"), ls, color="C3", label=f"R ({s.label})")
        for col in ("r", "R"):
            if s.tail:
                ax.plot(s.floats("k", s.tail), s.floats(col, s.tail),
                        label=f"{col} ({s.label}, unreliable)", **UNRELIABLE_STYLE)
        kmax = max(kmax, int(max(s.floats("k", s.rows + s.unreliable))))
    _envelopes(ax, kmax, spec.tau)
    ax.set_xlabel("k")
    ax.set_ylabel("distance from the origin")
    ax.set_title("zone distances r_k, R_k")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig, ax


def main(argv=None) -> int:
    def extra(ap):
        ap.add_argument("--tau", type=float, default=None,
                        help="perturbation magnitude for the widened envelopes")

    return run(make_figure, "distances", __doc__, argv, extra_args=extra)


if __name__ == "__main__":
    sys.exit(main())
