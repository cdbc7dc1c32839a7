"""psfig 1.1 figure inclusion, reimplemented with its exact integer arithmetic."""

from .emitter import (
    BANNER,
    DEFAULT_PROLOG,
    DocumentState,
    InclusionPlan,
    Mode,
    decide_mode,
    emit_draft_box,
    emit_global,
    emit_specials,
    init_specials,
    log_lines,
    psfig,
)
from .epsbb import BoundingBox, FileScanner, parse_bb_line, scan_bounding_box, scan_file
from .errors import (
    BoundingBoxError,
    DimensionError,
    DimensionOverflow,
    GeometryError,
    MalformedBoundingBox,
    NoBoundingBox,
    OptionError,
    PsfigError,
    TeXScanError,
)
from .options import FigOptions, apply_key, parse_options
from .solver import SizePlan, compute_handw, compute_resv, in_hundreds, plan_sizes, resolve_bbox
from .texdim import MAX_DIMEN, UNITY, format_pt, format_sp, parse_dimension
from .texscan import Directive, migrate, process_document, scan_document

__version__ = "0.1.0"

__all__ = [
    "apply_key",
    "BANNER",
    "BoundingBox",
    "BoundingBoxError",
    "compute_handw",
    "compute_resv",
    "decide_mode",
    "DEFAULT_PROLOG",
    "DimensionError",
    "DimensionOverflow",
    "Directive",
    "DocumentState",
    "emit_draft_box",
    "emit_global",
    "emit_specials",
    "FigOptions",
    "FileScanner",
    "format_pt",
    "format_sp",
    "GeometryError",
    "in_hundreds",
    "InclusionPlan",
    "init_specials",
    "log_lines",
    "MalformedBoundingBox",
    "MAX_DIMEN",
    "migrate",
    "Mode",
    "NoBoundingBox",
    "OptionError",
    "parse_bb_line",
    "parse_dimension",
    "parse_options",
    "plan_sizes",
    "process_document",
    "psfig",
    "PsfigError",
    "resolve_bbox",
    "scan_bounding_box",
    "scan_document",
    "scan_file",
    "SizePlan",
    "TeXScanError",
    "UNITY",
]
