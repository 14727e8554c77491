"""Spatio-temporal invariants: filtering, folding and normalization."""
from .errors import (
    DocumentSyntaxError, ParameterError, ParseError, RangeError, SchemaError, ShapeError,
    StinvError, UnsupportedAtomError,
)
from .filtering import TimeWindow, filter_space, filter_time
from .fold import (
    IterationPath, TimeIteration, add_area_occupied, add_cloudy_area, fold_space, fold_time,
    owner_point_counter,
)
from .geometry import (
    calculate_area, expand_box_to_points, guarded_clauses, intersect_boxes,
    is_guarded_normal_form, point_semantics,
)
from .io import ModelDocument, parse, parse_document, serialize, serialize_document
from .kernels import BACKEND
from .normalize import (
    deduplicate, flatten, merge_owners, normalize_owner_occupied, normalize_std, order,
)
from .rewrite import apply_once, simplify
from .terms import *  # noqa: F401,F403
from .terms import __all__ as _term_names

__version__ = "0.1.0"

__all__ = [
    *_term_names,
    "BACKEND", "DocumentSyntaxError", "IterationPath", "ModelDocument", "ParameterError",
    "ParseError", "RangeError", "SchemaError", "ShapeError", "StinvError", "TimeIteration",
    "TimeWindow", "UnsupportedAtomError", "add_area_occupied", "add_cloudy_area", "apply_once",
    "calculate_area", "deduplicate", "expand_box_to_points", "filter_space", "filter_time",
    "flatten", "fold_space", "fold_time", "guarded_clauses", "intersect_boxes",
    "is_guarded_normal_form", "merge_owners", "normalize_owner_occupied", "normalize_std",
    "order", "owner_point_counter", "parse", "parse_document", "point_semantics", "serialize",
    "serialize_document", "simplify",
]
