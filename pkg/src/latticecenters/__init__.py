"""Exact geometry of triangle centers on the integer lattice.

Computes circumcenter, centroid, orthocenter and incenter of integer
lattice triangles in exact arithmetic, decides which lattice perimeters
are achievable when a center must itself be a lattice point, and
provides construction families, exclusion certificates, a bounded
search, and a command-line interface.
"""

from .angles import (
    ExactAngle,
    PiOrder,
    angle_add,
    angle_from_tan,
    arctan_sum,
    compare_to_pi,
    render_table,
    solve_pi_triples,
)
from .centers import (
    CenterCondition,
    CenterReport,
    RationalPoint,
    center_report,
    centroid,
    circumcenter,
    orthic_m_values,
    orthocenter,
)
from .constructions import Witness, WitnessRequest, build_witness, scale, sheared
from .feasibility import (
    ExclusionCertificate,
    ExclusionReport,
    SideMultiset,
    exclusion_report,
    partitions,
    prop1_witness,
    prop2_witness,
)
from .incenter import IncenterReport, incenter_report, incenter_scan, lattice_incenter
from .lattice import (
    DegenerateTriangleError,
    LatticePoint,
    LatticeTriangle,
    Parity,
    ShapeClass,
    classify_shape,
    genus,
    lattice_length,
    lattice_perimeter,
    parity,
    side_lengths,
    triangle,
    twice_area,
)
from .search import (
    AchievabilityAtlas,
    SearchConfig,
    build_atlas,
    canonical_key,
    iter_canonical_triangles,
    verify_results_table,
)

__version__ = "0.1.0"

__all__ = [
    "AchievabilityAtlas",
    "CenterCondition",
    "CenterReport",
    "DegenerateTriangleError",
    "ExactAngle",
    "ExclusionCertificate",
    "ExclusionReport",
    "IncenterReport",
    "LatticePoint",
    "LatticeTriangle",
    "Parity",
    "PiOrder",
    "RationalPoint",
    "SearchConfig",
    "ShapeClass",
    "SideMultiset",
    "Witness",
    "WitnessRequest",
    "angle_add",
    "angle_from_tan",
    "arctan_sum",
    "build_atlas",
    "build_witness",
    "canonical_key",
    "center_report",
    "centroid",
    "circumcenter",
    "classify_shape",
    "compare_to_pi",
    "exclusion_report",
    "genus",
    "incenter_report",
    "incenter_scan",
    "iter_canonical_triangles",
    "lattice_incenter",
    "lattice_length",
    "lattice_perimeter",
    "orthic_m_values",
    "orthocenter",
    "parity",
    "partitions",
    "prop1_witness",
    "prop2_witness",
    "render_table",
    "scale",
    "sheared",
    "side_lengths",
    "solve_pi_triples",
    "triangle",
    "twice_area",
    "verify_results_table",
]
