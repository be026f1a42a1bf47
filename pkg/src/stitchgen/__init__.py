"""Parametric sewing patterns, silhouette rendering, and a masked
autoregressive generator that recovers pattern parameters from
silhouettes."""

from .errors import (
    CheckpointError,
    DatasetError,
    InfeasibleArc,
    InvalidPattern,
    OutOfBoundsValue,
    ParseError,
    SchemaVersionMismatch,
    SpecMismatch,
    StitchgenError,
    UnknownTemplate,
)
from .geometry import Arc, CubicBezier, Edge, Line, QuadBezier, edge_length, eval_edge
from .params import (
    Continuous,
    Discrete,
    ParamDef,
    ParamSpec,
    clamp_raw,
    default_raw,
    denormalize,
    normalize,
    sample_random,
    spec_to_obj,
)
from .pattern import Panel, Pattern, Placement, Stitch, panel_polyline
from .patternio import pattern_from_json, pattern_to_json, pattern_to_svg
from .templates import (
    TEMPLATES,
    Template,
    decode,
    describe_edit,
    get_template,
    template_by_id,
    template_names,
)
from .validation import ValidationIssue, ValidationReport, validate_pattern

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "CheckpointError",
    "Continuous",
    "CubicBezier",
    "DatasetError",
    "Discrete",
    "Edge",
    "InfeasibleArc",
    "InvalidPattern",
    "Line",
    "OutOfBoundsValue",
    "Panel",
    "ParamDef",
    "ParamSpec",
    "ParseError",
    "Pattern",
    "Placement",
    "QuadBezier",
    "SchemaVersionMismatch",
    "SpecMismatch",
    "Stitch",
    "StitchgenError",
    "TEMPLATES",
    "Template",
    "UnknownTemplate",
    "ValidationIssue",
    "ValidationReport",
    "clamp_raw",
    "decode",
    "default_raw",
    "denormalize",
    "describe_edit",
    "edge_length",
    "eval_edge",
    "get_template",
    "normalize",
    "panel_polyline",
    "pattern_from_json",
    "pattern_to_json",
    "pattern_to_svg",
    "sample_random",
    "spec_to_obj",
    "template_by_id",
    "template_names",
    "validate_pattern",
]
