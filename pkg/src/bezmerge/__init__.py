"""Merging of adjacent Bezier segments into a single constrained least-squares curve."""

from .curves import (
    MAX_DEGREE,
    BezierSegment,
    CompositeBezierCurve,
    Partition,
    bernstein_eval,
    binomial,
    endpoint_derivative,
    eval_composite,
    eval_composite_many,
    eval_segment,
    eval_segment_many,
    forward_difference,
)
from .curveio import (
    CurveDocument,
    MergeReport,
    as_composite,
    data_path,
    load_curve,
    load_report,
    run_merge,
    save_curve,
    save_report,
)
from .dualbasis import CTable, c_table, dual_eval, gram_matrix
from .errors import (
    CurveFormatError,
    DegenerateSegmentError,
    DegreeBoundError,
    DomainError,
    InternalConsistencyError,
    MergeError,
    ParameterError,
    ValidationError,
)
from .merging import (
    MergeParams,
    constrained_head,
    constrained_tail,
    dual_mid_coeffs,
    merge,
    merge_oracle,
    mid_controls,
    segment_dual_coeffs,
    validate,
)
from .metrics import (
    ErrorReport,
    a_table,
    arc_length_partition,
    i_nm,
    l2_error,
    max_error,
    rho_coeffs,
    segment_arc_length,
)
from .subdivision import DTable, d_direct, d_table
from .svgplot import emit_svg, emit_svg_overlays

__version__ = "0.1.0"

__all__ = [
    "MAX_DEGREE",
    "BezierSegment",
    "CTable",
    "CompositeBezierCurve",
    "CurveDocument",
    "CurveFormatError",
    "DTable",
    "DegenerateSegmentError",
    "DegreeBoundError",
    "DomainError",
    "ErrorReport",
    "InternalConsistencyError",
    "MergeError",
    "MergeParams",
    "MergeReport",
    "ParameterError",
    "Partition",
    "ValidationError",
    "a_table",
    "arc_length_partition",
    "as_composite",
    "bernstein_eval",
    "binomial",
    "c_table",
    "constrained_head",
    "constrained_tail",
    "d_direct",
    "d_table",
    "data_path",
    "dual_eval",
    "dual_mid_coeffs",
    "emit_svg",
    "emit_svg_overlays",
    "endpoint_derivative",
    "eval_composite",
    "eval_composite_many",
    "eval_segment",
    "eval_segment_many",
    "forward_difference",
    "gram_matrix",
    "i_nm",
    "l2_error",
    "load_curve",
    "load_report",
    "max_error",
    "merge",
    "merge_oracle",
    "mid_controls",
    "rho_coeffs",
    "run_merge",
    "save_curve",
    "save_report",
    "segment_arc_length",
    "segment_dual_coeffs",
    "validate",
]
