"""
First zones of the integer lattice
==================================

Build the bisector arrangement of a small window around the origin and look
at the cells it produces.  Everything is exact: vertices are rationals,
areas are rationals, depth labels are integer counts.
"""

from fractions import Fraction

from brillouin import build, depth_of_point, integer_window, locate_face, zone

# A window of radius 2: the 24 integer points within max-norm 2 of the origin.
g = integer_window(2)
print(f"{len(g.points)} generators, e.g. {g.points[:4]} ...")

# Each generator contributes one bisector line; the arrangement chops the
# clipped plane into convex faces.
arr = build(g)
print(f"{arr.n_lines} bisectors -> {arr.n_vertices} vertices, {arr.n_faces} faces")

# The face of depth 0 around the origin is the first zone: the unit square.
first = zone(arr, 1)
assert len(first) == 1
print("zone 1 corners:", [(str(v.x), str(v.y)) for v in first[0].polygon.vertices])

# The second zone is the four triangles past the square's edges.
second = zone(arr, 2)
print(f"zone 2: {len(second)} chambers, areas {[str(f.area_scaled) for f in second]}")

# Depth of a point = how many generators beat the origin there.  The point
# (3/5, 0) is past the first bisector 2x = 1 but before everything else.
x = (Fraction(3, 5), Fraction(0))
print(f"depth at (3/5, 0): brute force {depth_of_point(g, x)},"
      f" face lookup {locate_face(arr, x).depth}")
