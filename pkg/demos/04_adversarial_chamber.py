"""
An adversarial perturbation with a fat chamber
==============================================

Random noise barely moves zone boundaries, but a targeted perturbation can
inflate a single chamber: move every generator whose distance to a chosen
point x is within tau of ||x|| radially by tau, and the chamber of x grows
to contain the whole disk B(x, tau/2).
"""

from fractions import Fraction

from brillouin import adversarial_perturbation, build, locate_face, window_points

tau = Fraction(2, 5)
x = (Fraction(11, 10), Fraction(2, 5))

# x has depth 4, so it sits in zone 5 of the unperturbed lattice.
g = adversarial_perturbation(k=5, tau=tau, x=x, m=6, p=10**6)
moved = sum(
    1
    for (a1, a2), (px, py) in zip(window_points(6), g.points)
    if (px, py) != (g.scale * a1, g.scale * a2)
)
print(f"{moved} of {len(g.points)} generators moved (the near-critical shell of x)")

arr = build(g)
f = locate_face(arr, x)
p2 = Fraction(g.scale) ** 2
print(f"chamber of x: depth {f.depth}, area {float(f.area_scaled / p2):.4f}"
      f" (pi*(tau/2)^2 = {3.14159 * float(tau / 2) ** 2:.4f})")
print(f"vertices: {len(f.polygon.vertices)}")
print("the chamber swallowed B(x, 1/5); compare a typical zone-5 chamber area ~ 0.05")
