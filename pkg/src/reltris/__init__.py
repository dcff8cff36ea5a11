"""Computable invariants around relative trisections of 4-manifolds with boundary.

Exact integer Laurent polynomials, Alexander polynomials of chain-type
ribbon knots by band determinants, Casson invariants via the surgery
formula, the arithmetic of relative trisection parameters (g, k; p, b),
a homology-level model of relative trisection diagrams, and 2-bridge
link types from continued fractions.
"""

from .casson import SurgeryDatum, casson_surgery, distinguish_family
from .diagram import (
    CurveSystem,
    RelTrisectionDiagram,
    SurfaceModel,
    ValidationReport,
    pair_matrix,
    smith_normal_form,
    std_diagram,
)
from .errors import ConsistencyError, ParseError
from .laurent import LaurentPoly, exact_div, unit_equivalent
from .ribbon import (
    BandPresentation,
    TerasakaMatrix,
    alexander_from_bands,
    build_matrix,
    det_bareiss,
    det_cofactor,
    fox_milnor_factor,
    kn_presentation,
    terasaka_determinant,
    verify_fox_milnor,
)
from .tripar import (
    BoundaryClass,
    TrisectionType,
    admissible_tuples,
    genus_lower_bound,
)
from .twobridge import TwoBridgeType, cf_to_type, is_torus_type, isotopic

__version__ = "0.1.0"

__all__ = [
    "BandPresentation",
    "BoundaryClass",
    "ConsistencyError",
    "CurveSystem",
    "LaurentPoly",
    "ParseError",
    "RelTrisectionDiagram",
    "SurfaceModel",
    "SurgeryDatum",
    "TerasakaMatrix",
    "TrisectionType",
    "TwoBridgeType",
    "ValidationReport",
    "admissible_tuples",
    "alexander_from_bands",
    "build_matrix",
    "casson_surgery",
    "cf_to_type",
    "det_bareiss",
    "det_cofactor",
    "distinguish_family",
    "exact_div",
    "fox_milnor_factor",
    "genus_lower_bound",
    "is_torus_type",
    "isotopic",
    "kn_presentation",
    "pair_matrix",
    "smith_normal_form",
    "std_diagram",
    "terasaka_determinant",
    "unit_equivalent",
    "verify_fox_milnor",
]
