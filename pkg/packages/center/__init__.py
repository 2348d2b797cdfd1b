"""Center of a root monoid: equations and the commutation oracle."""

from .equations import (
    CenterEquality,
    CenterLocus,
    center_equations,
    coordinate_symbols,
    in_locus,
    monomial,
    render_locus,
    render_unit_equations,
    twisted_degree,
)
from .verification import (
    center_cross_validate,
    commutes_with,
    find_noncommuting_witness,
    is_central,
    locus_faces,
    sample_center_point,
    sample_vanishing_point,
)

__all__ = [
    "CenterEquality",
    "CenterLocus",
    "center_cross_validate",
    "center_equations",
    "commutes_with",
    "coordinate_symbols",
    "find_noncommuting_witness",
    "in_locus",
    "is_central",
    "locus_faces",
    "monomial",
    "render_locus",
    "render_unit_equations",
    "sample_center_point",
    "sample_vanishing_point",
    "twisted_degree",
]
