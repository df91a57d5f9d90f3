"""
Measuring the zones
===================

Per-zone distances, widths, areas and the isoperimetric distortion of the
growing union of zones.  Areas come out exactly 1 for every zone; the
distortion hovers well above 1 and spikes where the outer boundary grows
thin spurs.
"""

from brillouin import build, integer_window, theorem31_bounds, zone_reports

arr = build(integer_window(5))
print(f"window m=5: reliable through k = {arr.kmax_reliable}")

reports = zone_reports(arr, arr.kmax_reliable)

print(f"{'k':>3} {'r_k':>8} {'R_k':>8} {'W_k':>8} {'area':>6} {'chambers':>8} {'distortion':>10}")
for zr in reports[:12]:
    print(f"{zr.k:>3} {zr.r:>8.4f} {zr.R:>8.4f} {zr.width:>8.4f}"
          f" {str(zr.area):>6} {zr.n_chambers:>8} {zr.distortion:>10.4f}")

# The k=5 distortion spike is real: the boundary of the 5-disk is a 40-gon
# with eight protruding corners.
spike = max(reports[1:], key=lambda zr: zr.distortion)
print(f"\nlargest distortion: {spike.distortion:.4f} at k = {spike.k}")

# Every zone k >= 2 sits inside the theoretical distance bracket.
b = theorem31_bounds(2, 5)
zr = reports[4]
print(f"k=5 bracket check: {b.r_lo:.4f} < r={zr.r:.4f} < {b.r_hi:.4f},"
      f" {b.R_lo:.4f} < R={zr.R:.4f} < {b.R_hi:.4f}")
