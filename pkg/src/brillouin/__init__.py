"""Exact-arithmetic Brillouin zones of the planar integer lattice, with
support for random and adversarial perturbations of the generators."""

from .arrangement import (
    Arrangement,
    Face,
    build,
    default_clip_half_width,
    depth_of_point,
    locate_face,
    to_json_dict,
    zone,
)
from .geometry import (
    BigInt,
    BigRat,
    BisectorLine,
    ConvexPolygon,
    QPoint,
    bisector_of,
    cmp_sq_dist,
    line_intersect,
    polygon_area,
    polygon_contains,
    polygon_diameter_sq,
    polygon_origin_dist_range,
    sq_dist,
)
from .lattice import (
    GeneratorSet,
    Magnitude,
    PerturbationConfig,
    ReliabilityBound,
    adversarial_perturbation,
    integer_window,
    magnitude,
    perturb,
    reliable_k,
    reliable_k_from_magnitude,
    window_points,
)
from .metrics import (
    BoundSet,
    DiameterBound,
    RayProfile,
    StabilityReport,
    ZoneReport,
    circle_lattice_count,
    directions_ring,
    invert,
    knear_count,
    knear_set,
    ksets_count,
    kth_smallest,
    ray_profile,
    recommended_knear_m,
    stability_gap,
    theorem31_bounds,
    theorem32_bounds,
    theorem61_bound,
    unit_ball_volume,
    zone_report,
    zone_reports,
)
from .verify import VerifyReport, run_checks

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "Face", "build", "default_clip_half_width", "depth_of_point",
    "locate_face", "to_json_dict", "zone",
    "BigInt", "BigRat", "BisectorLine", "ConvexPolygon", "QPoint", "bisector_of",
    "cmp_sq_dist", "line_intersect", "polygon_area", "polygon_contains",
    "polygon_diameter_sq", "polygon_origin_dist_range", "sq_dist",
    "GeneratorSet", "Magnitude", "PerturbationConfig", "ReliabilityBound",
    "adversarial_perturbation", "integer_window", "magnitude", "perturb",
    "reliable_k", "reliable_k_from_magnitude", "window_points",
    "BoundSet", "DiameterBound", "RayProfile", "StabilityReport", "ZoneReport",
    "circle_lattice_count", "directions_ring", "invert", "knear_count",
    "knear_set", "ksets_count", "kth_smallest", "ray_profile",
    "recommended_knear_m", "stability_gap", "theorem31_bounds",
    "theorem32_bounds", "theorem61_bound", "unit_ball_volume", "zone_report",
    "zone_reports",
    "VerifyReport", "run_checks",
]
