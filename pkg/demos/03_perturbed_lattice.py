"""
Random perturbations and what survives them
===========================================

Displace every generator by up to q/p per coordinate (seeded, reproducible)
and watch the exact machinery carry over: areas are no longer 1, but the
perturbation-robust distance brackets still hold, and the ray-crossing
profile quantifies how far each zone boundary moved.
"""

from brillouin import (
    PerturbationConfig,
    build,
    directions_ring,
    magnitude,
    perturb,
    reliable_k,
    stability_gap,
    zone_reports,
)

cfg = PerturbationConfig(m=5, q=1000, seed=42)
g = perturb(cfg)
mag = magnitude(g)
print(f"q/p = {cfg.q}/{cfg.p}: measured magnitude {mag.sup:.5f} (<= sqrt2*q/p = {2**0.5 * cfg.q / cfg.p:.5f})")

# Stronger shaking costs reliability: the window only provably determines
# the first kmax zones.
for q in (0, 200, 1000, 2500):
    print(f"  q={q:>5}: reliable through k = {reliable_k(cfg.m, q).kmax}")

arr = build(g)
reports = zone_reports(arr, min(6, arr.kmax_reliable))
for zr in reports:
    print(f"k={zr.k}: area {float(zr.area):.6f}, {zr.n_chambers} chambers")

# Per-direction boundary displacement of the 4-disk, against the unperturbed
# lattice.  The gap is tiny for weak noise.
rep = stability_gap(g, k=4, directions=directions_ring(4))
print(f"max boundary gap over {len(rep.gaps)} directions: {rep.max_gap:.5f} at u = {rep.argmax}")
