"""Command-line interface: build arrangements, export zone metrics and ray
profiles as CSV, and run the verification suite.

All output is deterministic for a fixed configuration: exact rationals are
written as "num/den" strings and floats with 17 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .arrangement import build, to_json_dict
from .lattice import GeneratorSet, PerturbationConfig, integer_window, perturb, reliable_k
from .metrics import ZoneReport, directions_ring, ray_profile, zone_reports
from .verify import run_checks

ZONES_COLUMNS = [
    "k", "r", "R", "W", "area_num", "area_den", "area_float", "cum_area_over_k",
    "perimeter", "distortion", "n_chambers", "max_chamber_area",
    "max_chamber_diameter", "reliable",
]

RAYS_COLUMNS = ["ux", "uy", "alpha_sq", "beta_sq", "alpha", "beta", "gap"]


def f17(x: float) -> str:
    return format(x, ".17g")


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class RunConfig:
    m: int = 9
    p: int = 10000
    q: int = 0
    seed: int = 0

    def generators(self) -> GeneratorSet:
        # Unperturbed runs live at scale 1; the scale only matters once a
        # perturbation actually displaces points.
        if self.q == 0:
            return integer_window(self.m)
        return perturb(PerturbationConfig(m=self.m, q=self.q, seed=self.seed, p=self.p))


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--m", type=int, default=9, help="window radius (default 9)")
    sp.add_argument("--p", type=int, default=10000, help="perturbation scale (default 10000)")
    sp.add_argument("--q", type=int, default=0, help="perturbation strength in scale units (default 0)")
    sp.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    sp.add_argument("--clip", type=parse_rational, default=None,
                    help="clip half-width as a rational, e.g. 7 or 13/2 (default: derived)")


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(m=args.m, p=args.p, q=args.q, seed=args.seed)


def _resolve_kmax(args: argparse.Namespace, kmax_reliable: int) -> int:
    kmax = args.kmax
    if kmax is None:
        return kmax_reliable
    if kmax < 0:
        raise SystemExit("--kmax must be nonnegative")
    if kmax > kmax_reliable and not args.unsafe:
        raise SystemExit(
            f"--kmax {kmax} exceeds the reliability bound {kmax_reliable}; "
            "pass --unsafe to compute flagged rows"
        )
    return kmax


def write_zones_csv(path: str, reports: Sequence[ZoneReport]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(ZONES_COLUMNS)
        for zr in reports:
            w.writerow([
                zr.k,
                f17(zr.r),
                f17(zr.R),
                f17(zr.width),
                zr.area.numerator,
                zr.area.denominator,
                f17(float(zr.area)),
                f17(zr.cum_area_over_k),
                f17(zr.perimeter),
                f17(zr.distortion),
                zr.n_chambers,
                f17(float(zr.max_chamber_area)),
                f17(zr.max_chamber_diameter),
                1 if zr.reliable else 0,
            ])


def cmd_build(args: argparse.Namespace) -> int:
    cfg = _config(args)
    arr = build(cfg.generators(), clip_half_width=args.clip)
    doc = to_json_dict(arr)
    with open(args.out, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    if args.stats:
        print(json.dumps(arr.stats()))
    else:
        print(f"wrote {args.out}: {arr.n_lines} lines, {arr.n_vertices} vertices, {arr.n_faces} faces")
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    cfg = _config(args)
    arr = build(cfg.generators(), clip_half_width=args.clip)
    kmax = _resolve_kmax(args, arr.kmax_reliable)
    reports = zone_reports(arr, kmax, allow_unreliable=args.unsafe)
    write_zones_csv(args.out, reports)
    print(f"wrote {args.out}: zones 1..{kmax} (reliable through {arr.kmax_reliable})")
    return 0


def cmd_rays(args: argparse.Namespace) -> int:
    if args.directions % 8 != 0 or args.directions < 8:
        raise SystemExit("--directions must be a positive multiple of 8")
    cfg = _config(args)
    g = cfg.generators()
    rel = reliable_k(cfg.m, cfg.q, cfg.p)
    if args.k > rel.kmax and not args.unsafe:
        raise SystemExit(
            f"--k {args.k} exceeds the reliability bound {rel.kmax}; pass --unsafe to proceed"
        )
    base = integer_window(cfg.m)
    rows = []
    max_gap = -1.0
    max_u = None
    for u in directions_ring(args.directions // 8):
        a_sq = ray_profile(base, u, kmax=args.k).alpha_sq(args.k)
        b_sq = ray_profile(g, u, kmax=args.k).alpha_sq(args.k)
        alpha = math.sqrt(float(a_sq))
        beta = math.sqrt(float(b_sq))
        gap = abs(beta - alpha)
        if gap > max_gap:
            max_gap, max_u = gap, u
        rows.append([u[0], u[1], frac_str(a_sq), frac_str(b_sq), f17(alpha), f17(beta), f17(gap)])
    with open(args.out, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RAYS_COLUMNS)
        w.writerows(rows)
    print(f"wrote {args.out}: {len(rows)} directions, max_gap={f17(max_gap)} at u={max_u}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    arr = build(cfg.generators(), clip_half_width=args.clip)
    kmax = _resolve_kmax(args, arr.kmax_reliable)
    rep = run_checks(
        arr,
        kmax=kmax,
        allow_unreliable=args.unsafe,
        adversarial_tau=args.tau,
    )
    for c in rep.checks:
        print(f"{'ok  ' if c.passed else 'FAIL'}  {c.name}: {c.detail}")
    doc = {
        "config": {"m": cfg.m, "p": cfg.p, "q": cfg.q, "seed": cfg.seed, "kmax": kmax},
        **rep.to_json_dict(),
    }
    with open(args.out, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    print(("all checks passed" if rep.passed else "CHECKS FAILED") + f"; wrote {args.out}")
    return 0 if rep.passed else 1


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="brillouin",
        description="Exact Brillouin zones of the (possibly perturbed) integer lattice",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build the arrangement and write arrangement.json")
    _add_common(b)
    b.add_argument("--out", default="arrangement.json")
    b.add_argument("--stats", action="store_true", help="print stats JSON to stdout")
    b.set_defaults(func=cmd_build)

    mt = sub.add_parser("metrics", help="write per-zone metrics to zones.csv")
    _add_common(mt)
    mt.add_argument("--kmax", type=int, default=None, help="last zone (default: reliability bound)")
    mt.add_argument("--unsafe", action="store_true", help="allow zones beyond the reliability bound")
    mt.add_argument("--out", default="zones.csv")
    mt.set_defaults(func=cmd_metrics)

    ry = sub.add_parser("rays", help="write per-direction crossing distances to rays.csv")
    _add_common(ry)
    ry.add_argument("--k", type=int, required=True, help="zone boundary index")
    ry.add_argument("--directions", type=int, default=64, help="ring size, multiple of 8 (default 64)")
    ry.add_argument("--unsafe", action="store_true", help="allow k beyond the reliability bound")
    ry.add_argument("--out", default="rays.csv")
    ry.set_defaults(func=cmd_rays)

    vf = sub.add_parser("verify", help="run the verification suite and write verify.json")
    _add_common(vf)
    vf.add_argument("--kmax", type=int, default=None, help="last zone to check (default: reliability bound)")
    vf.add_argument("--unsafe", action="store_true", help="allow zones beyond the reliability bound")
    vf.add_argument("--tau", type=parse_rational, default=None,
                    help="also run the adversarial-chamber check with this tau (e.g. 2/5)")
    vf.add_argument("--out", default="verify.json")
    vf.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
