"""Exact construction and verification of interpolation witnesses for rational normal scrolls."""

from .errors import (
    DegenerateError,
    FieldMismatchError,
    PreconditionError,
    RetryExhausted,
    ScrollInterpError,
)
from .exactlin import GF, QQ, Matrix, ModP, Poly2, parse_field, poly_roots
from .interp import (
    dim_identity_report,
    hilb_dim,
    hypersurface_through_points,
    interpolation_numerics,
    numerics_residual,
    schubert_planes,
    schubert_planes_enumerate,
)
from .pipeline import WitnessTree, interpolate, verify_witness
from .projgeom import LinSubspace, ProjPoint, frame_map, meet, span
from .rng import SplitMix64
from .scrollcore import (
    BrokenScroll,
    QuadricSet,
    RatCurveParam,
    Scroll,
    broken_scroll_verify,
    degree_by_slicing,
    enumerate_lines_Fq,
    fano_components,
    point_on_scroll,
    rnc_through_points,
    scroll_quadrics,
    segre_from_config,
)

__version__ = "0.1.0"

__all__ = [
    "BrokenScroll",
    "DegenerateError",
    "FieldMismatchError",
    "GF",
    "LinSubspace",
    "Matrix",
    "ModP",
    "Poly2",
    "PreconditionError",
    "ProjPoint",
    "QQ",
    "QuadricSet",
    "RatCurveParam",
    "RetryExhausted",
    "Scroll",
    "ScrollInterpError",
    "SplitMix64",
    "WitnessTree",
    "broken_scroll_verify",
    "degree_by_slicing",
    "dim_identity_report",
    "enumerate_lines_Fq",
    "fano_components",
    "frame_map",
    "hilb_dim",
    "hypersurface_through_points",
    "interpolate",
    "interpolation_numerics",
    "meet",
    "numerics_residual",
    "parse_field",
    "point_on_scroll",
    "poly_roots",
    "rnc_through_points",
    "schubert_planes",
    "schubert_planes_enumerate",
    "scroll_quadrics",
    "segre_from_config",
    "span",
    "verify_witness",
]
