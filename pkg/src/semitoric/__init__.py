"""Exact invariants, moduli metrics, and completion diagnostics for
simple semitoric integrable systems."""

from .completion import (
    GeneralizedIngredients,
    GeneralizedMarker,
    SequenceReport,
    canonical_order,
    cauchy_report,
    distance_completion,
    distance_completion_report,
    generalize,
    truncate_polygon,
    validate_generalized,
)
from .invariants import (
    IncomparableError,
    Marker,
    SemitoricIngredients,
    alignment_constant,
    appropriate_permutations,
    canonical_twist,
    orbit_polygons,
    orbit_regions,
    shifted_representative,
    twisting_equivalent,
    validate_ingredients,
    validate_semitoric_polygon,
)
from .measures import (
    AdmissibleMeasure,
    lebesgue_area,
    measure_from_spec,
    nu0,
    power_tail,
    rational_decay,
    region_measure,
    symmetric_difference_measure,
    validate_admissible,
)
from .metric import (
    AlignmentError,
    AlignmentResult,
    comparison_with_alignment,
    distance_component,
    distance_full,
    distance_id,
    distance_report,
    polygon_distance_aligned,
)
from .polygon import (
    ConvexPolygonalSet,
    CornerType,
    DegenerateInputError,
    HalfPlane,
    InfiniteHeightError,
    OrientationError,
    PiecewiseLinearFn,
    Vertex,
    VerticalRegion,
    classify_corner,
    corners,
    global_shear,
    has_everywhere_finite_height,
    polygon_from_halfplanes,
    polygon_from_vertices,
    slice_interval,
    to_vertical_region,
    vertical_shear,
)
from .taylor import (
    TaylorSeries2,
    ZERO_SERIES,
    WeightFamily,
    geometric_weights,
    power_weights,
    tail_bound,
    taylor_distance_general,
    taylor_distance_semitoric,
    validate_series,
)
from .validation import ValidationReport, Violation

__all__ = [
    "AdmissibleMeasure",
    "AlignmentError",
    "AlignmentResult",
    "ConvexPolygonalSet",
    "CornerType",
    "DegenerateInputError",
    "GeneralizedIngredients",
    "GeneralizedMarker",
    "HalfPlane",
    "IncomparableError",
    "InfiniteHeightError",
    "Marker",
    "OrientationError",
    "PiecewiseLinearFn",
    "SemitoricIngredients",
    "SequenceReport",
    "TaylorSeries2",
    "ZERO_SERIES",
    "ValidationReport",
    "Vertex",
    "VerticalRegion",
    "Violation",
    "WeightFamily",
    "alignment_constant",
    "appropriate_permutations",
    "canonical_order",
    "canonical_twist",
    "cauchy_report",
    "classify_corner",
    "comparison_with_alignment",
    "corners",
    "distance_completion",
    "distance_completion_report",
    "distance_component",
    "distance_full",
    "distance_id",
    "distance_report",
    "generalize",
    "geometric_weights",
    "global_shear",
    "has_everywhere_finite_height",
    "lebesgue_area",
    "measure_from_spec",
    "nu0",
    "orbit_polygons",
    "orbit_regions",
    "polygon_distance_aligned",
    "polygon_from_halfplanes",
    "polygon_from_vertices",
    "power_tail",
    "power_weights",
    "rational_decay",
    "region_measure",
    "shifted_representative",
    "slice_interval",
    "symmetric_difference_measure",
    "tail_bound",
    "taylor_distance_general",
    "taylor_distance_semitoric",
    "to_vertical_region",
    "truncate_polygon",
    "twisting_equivalent",
    "validate_admissible",
    "validate_generalized",
    "validate_ingredients",
    "validate_semitoric_polygon",
    "validate_series",
    "vertical_shear",
]
