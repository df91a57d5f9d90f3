"""Generator sets over the integer lattice: windows, random and adversarial
perturbations, and reliability bounds for finite-window truncation.

Random perturbations use the Philox 4x64 counter-based bit generator keyed
with the seed.  The raw 64-bit stream is mapped to uniform draws in [-q, q]
by plain rejection sampling (accept r < floor(2**64 / (2q+1)) * (2q+1)),
two draws per window point in row-major window order.  This pins the exact
output stream independent of any convenience API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Iterator, Optional

from numpy.random import Philox

from .exactmath import PI_LO, SQRT2_HI, largest_int_below, sqrt_midpoint
from .geometry import BigRat, QPoint

IntPoint = tuple[int, int]


def window_points(m: int) -> list[IntPoint]:
    """All integer points of [-m, m]^2 except the origin, in row-major order."""
    if m < 1:
        raise ValueError("window radius m must be at least 1")
    return [(a1, a2) for a1 in range(-m, m + 1) for a2 in range(-m, m + 1) if (a1, a2) != (0, 0)]


@dataclass(frozen=True)
class GeneratorSet:
    """Finite generator set stored as integer points at a common scale.

    The true generators are points[i] / scale; pairing with the unperturbed
    window is positional (points[i] perturbs window_points(m)[i]).  q is the
    perturbation strength in scale units (None when the set was built by some
    other process, e.g. an adversarial move), seed the RNG key used.
    """

    scale: int
    m: int
    q: Optional[int]
    seed: Optional[int]
    points: tuple[IntPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple((int(x), int(y)) for x, y in self.points))
        if self.scale < 1:
            raise ValueError("scale must be positive")
        if not self.points:
            raise ValueError("generator set cannot be empty")
        # Sets with a declared strength are positionally paired with the
        # window; free-form sets (q=None) only promise the bounding box.
        if self.q is not None:
            expected = (2 * self.m + 1) ** 2 - 1
            if len(self.points) != expected:
                raise ValueError(f"expected {expected} window points, got {len(self.points)}")
        bound = self.scale * self.m + (self.q if self.q is not None else self.scale)
        if any(abs(x) > bound or abs(y) > bound for x, y in self.points):
            raise ValueError(f"generator point outside the [-{bound}, {bound}]^2 box")
        if len(set(self.points)) != len(self.points):
            raise ValueError("generator points must be distinct")
        if (0, 0) in self.points:
            raise ValueError("the origin cannot be a generator")

    @property
    def is_window_shaped(self) -> bool:
        return len(self.points) == (2 * self.m + 1) ** 2 - 1

    def to_json_dict(self) -> dict:
        return {
            "scale": self.scale,
            "m": self.m,
            "q": self.q,
            "seed": self.seed,
            "points": [[x, y] for x, y in self.points],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "GeneratorSet":
        return cls(
            scale=d["scale"],
            m=d["m"],
            q=d["q"],
            seed=d["seed"],
            points=tuple((x, y) for x, y in d["points"]),
        )


def integer_window(m: int) -> GeneratorSet:
    """The unperturbed window [-m, m]^2 minus the origin, at scale 1."""
    return GeneratorSet(scale=1, m=m, q=0, seed=None, points=tuple(window_points(m)))


@dataclass(frozen=True)
class PerturbationConfig:
    m: int
    q: int
    seed: int
    p: int = 10000

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("window radius m must be at least 1")
        if self.p < 1:
            raise ValueError("scale p must be positive")
        # Strictly below p/2 the images stay distinct for free; at exactly
        # p/2 (strength 1/2) collisions are possible but astronomically rare,
        # and the construction re-checks distinctness after drawing.
        if not 0 <= 2 * self.q <= self.p:
            raise ValueError("strength must satisfy 0 <= q <= p/2")


def _rejection_draws(seed: int, q: int) -> Iterator[int]:
    """Uniform draws in [-q, q] from the Philox raw stream, rejection sampled."""
    span = 2 * q + 1
    limit = ((1 << 64) // span) * span
    bitgen = Philox(key=seed)
    while True:
        for r in bitgen.random_raw(256):
            r = int(r)
            if r < limit:
                yield r % span - q


def perturb(cfg: PerturbationConfig) -> GeneratorSet:
    """Displace each window point uniformly in the integer square [-q, q]^2 at scale p.

    Each nonzero window point a maps to p*a + (dx, dy); (0, 0) maps to itself
    and stays excluded.  q = 0 draws nothing.
    """
    base = window_points(cfg.m)
    p = cfg.p
    if cfg.q == 0:
        pts = tuple((p * a1, p * a2) for a1, a2 in base)
    else:
        draws = _rejection_draws(cfg.seed, cfg.q)
        out = []
        for a1, a2 in base:
            dx = next(draws)
            dy = next(draws)
            out.append((p * a1 + dx, p * a2 + dy))
        pts = tuple(out)
    return GeneratorSet(scale=p, m=cfg.m, q=cfg.q, seed=cfg.seed, points=pts)


@dataclass(frozen=True)
class Magnitude:
    """Largest generator displacement: exact squared value and a float view."""

    sup_sq: BigRat
    sup: float


def magnitude(g: GeneratorSet) -> Magnitude:
    """Exact perturbation magnitude of g against its unperturbed window."""
    base = window_points(g.m)
    if len(g.points) != len(base):
        raise ValueError("magnitude needs a window-shaped generator set")
    p = g.scale
    worst = 0
    for (a1, a2), (x, y) in zip(base, g.points):
        dx = x - p * a1
        dy = y - p * a2
        d = dx * dx + dy * dy
        if d > worst:
            worst = d
    sup_sq = Fraction(worst, p * p)
    return Magnitude(sup_sq=sup_sq, sup=math.sqrt(float(sup_sq)))


@dataclass(frozen=True)
class ReliabilityBound:
    """Largest k for which the window provably determines the first k zones."""

    m: int
    tau: BigRat
    kmax: int
    bound: BigRat  # conservative lower evaluation of the strict threshold


def _bound_from_bracket(m: int, tau: BigRat, bracket: BigRat) -> ReliabilityBound:
    if bracket <= 0:
        return ReliabilityBound(m=m, tau=tau, kmax=0, bound=Fraction(0))
    bound = PI_LO / 4 * bracket * bracket
    return ReliabilityBound(m=m, tau=tau, kmax=max(0, largest_int_below(bound)), bound=bound)


def reliable_k(m: int, q: int = 0, p: int = 10000) -> ReliabilityBound:
    """Reliability bound for a strength-q perturbation: k < (pi/4)(m+1-sqrt2-(2*sqrt2+1)*tau)^2.

    Evaluated with one-sided rational constants so kmax is never overstated.
    """
    tau = Fraction(q, p)
    bracket = (m + 1) - SQRT2_HI - (2 * SQRT2_HI + 1) * tau
    return _bound_from_bracket(m, tau, bracket)


def reliable_k_from_magnitude(m: int, mag: BigRat) -> ReliabilityBound:
    """Reliability bound when only the displacement magnitude is known:
    k < (pi/4)(m+1-sqrt2-3*g)^2."""
    g = Fraction(mag)
    if g < 0:
        raise ValueError("magnitude must be nonnegative")
    bracket = (m + 1) - SQRT2_HI - 3 * g
    return _bound_from_bracket(m, g, bracket)


def _abs_diff_less(a_sq: BigRat, b_sq: BigRat, t: BigRat) -> bool:
    """Exact test |sqrt(a_sq) - sqrt(b_sq)| < t for nonnegative rationals."""
    lhs = a_sq + b_sq - t * t
    if lhs < 0:
        return True
    return lhs * lhs < 4 * a_sq * b_sq


def adversarial_perturbation(
    k: int, tau: BigRat, x: QPoint, m: int, p: int = 10000
) -> GeneratorSet:
    """Move every generator in the near-critical shell of x radially by tau.

    Generators with ||x - a|| inside (||x||, ||x|| + tau) move outward to
    distance ||x|| + tau from x; those inside (||x|| - tau, ||x||) move inward
    to ||x|| - tau; everything else stays.  Results snap to the integer grid
    at scale p, so each displacement is at most tau + 1/p.
    """
    tau = Fraction(tau)
    if not 0 < tau < Fraction(1, 2):
        raise ValueError("tau must lie in (0, 1/2)")
    x = x if isinstance(x, QPoint) else QPoint(*x)
    base = window_points(m)
    r_sq = x.sq_norm()
    if r_sq == 0:
        raise ValueError("x must not be the origin")

    d_sqs = []
    depth = 0
    for a1, a2 in base:
        dx = x.x - a1
        dy = x.y - a2
        d_sq = dx * dx + dy * dy
        if d_sq == r_sq:
            raise ValueError(f"x lies on the bisector of {(a1, a2)}; not strictly interior")
        if d_sq < r_sq:
            depth += 1
        d_sqs.append(d_sq)
    if depth != k - 1:
        raise ValueError(f"x has depth {depth}, so it is interior to zone {depth + 1}, not {k}")

    r_mid = sqrt_midpoint(r_sq)
    pts = []
    for (a1, a2), d_sq in zip(base, d_sqs):
        moved = d_sq != r_sq and _abs_diff_less(d_sq, r_sq, tau)
        if not moved:
            pts.append((p * a1, p * a2))
            continue
        # Target distance from x along the ray x -> a, then snap to the grid.
        target = r_mid + tau if d_sq > r_sq else r_mid - tau
        ratio = target / sqrt_midpoint(d_sq)
        nx = x.x + (a1 - x.x) * ratio
        ny = x.y + (a2 - x.y) * ratio
        pts.append((round(p * nx), round(p * ny)))
    return GeneratorSet(scale=p, m=m, q=None, seed=None, points=tuple(pts))
