"""discprox: exact proximity of taxicab digital discs on the integer plane.

Digital circles and discs are enumerated exactly; the symmetric
difference and Hausdorff metrics compare pixel sets; closed-form overlap
values for disc pairs are evaluated per regime and adjudicated against a
brute-force enumeration oracle.
"""

from ._backend import BACKEND, available_backends
from .errors import (
    CoordinateBoundError,
    DegenerateOverlapError,
    EnumerationCapError,
    ParityError,
    RegimeError,
)
from .lattice import (
    COORD_BOUND,
    DEFAULT_ENUM_CAP,
    PI_L1,
    DigitalCircle,
    DigitalDisc,
    PixelPoint,
    PixelSet,
    UVPoint,
    circle_cardinality_closed,
    circumference_closed,
    disc_cardinality_closed,
    enumerate_circle,
    enumerate_disc,
    from_uv,
    l1_distance,
    to_uv,
)
from .metrics import hausdorff_distance, symmetric_difference_metric
from .proximity import (
    FORMULAS,
    DiscPair,
    OverlapRect,
    RectDims,
    SweepResult,
    VerificationReport,
    boundaries_intersect,
    centers_collinear,
    classify_pair,
    counterexample_search,
    discs_intersect,
    intersection_cardinality_oracle,
    m_closed_corollary,
    m_closed_thm1,
    m_closed_thm2,
    m_closed_thm3,
    overlap_rectangle,
    rect_dims,
    run_sweep,
    thm3_intersection_disc,
    verify_pair,
)
from .scene import Scene, SceneError, load_scene, parse_scene

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "COORD_BOUND",
    "DEFAULT_ENUM_CAP",
    "FORMULAS",
    "PI_L1",
    "CoordinateBoundError",
    "DegenerateOverlapError",
    "DigitalCircle",
    "DigitalDisc",
    "DiscPair",
    "EnumerationCapError",
    "OverlapRect",
    "ParityError",
    "PixelPoint",
    "PixelSet",
    "RectDims",
    "RegimeError",
    "Scene",
    "SceneError",
    "SweepResult",
    "UVPoint",
    "VerificationReport",
    "available_backends",
    "boundaries_intersect",
    "centers_collinear",
    "circle_cardinality_closed",
    "circumference_closed",
    "classify_pair",
    "counterexample_search",
    "disc_cardinality_closed",
    "discs_intersect",
    "enumerate_circle",
    "enumerate_disc",
    "from_uv",
    "hausdorff_distance",
    "intersection_cardinality_oracle",
    "l1_distance",
    "load_scene",
    "m_closed_corollary",
    "m_closed_thm1",
    "m_closed_thm2",
    "m_closed_thm3",
    "overlap_rectangle",
    "parse_scene",
    "rect_dims",
    "run_sweep",
    "symmetric_difference_metric",
    "thm3_intersection_disc",
    "to_uv",
    "verify_pair",
]
