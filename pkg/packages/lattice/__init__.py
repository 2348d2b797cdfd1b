"""Exact lattice and cone arithmetic."""

from .cone import (
    Cone,
    Face,
    double_description,
    dual_cone,
    faces,
    find_face,
    is_regular_face,
    rational_rank,
    relative_interior_point,
)
from .semigroup import (
    SemigroupBasis,
    degree,
    enumerate_semigroup,
    express_in_generators,
    hilbert_basis,
    lattice_points_up_to_degree,
    perp_semigroup,
    semigroup_basis,
)
from .smith import (
    PerpLattice,
    SmithForm,
    decompose_in_sublattice,
    perp_lattice,
    smith_normal_form,
    solve_integer,
)
from .vectors import LatticeVector, pairing

__all__ = [
    "Cone",
    "Face",
    "LatticeVector",
    "PerpLattice",
    "SemigroupBasis",
    "SmithForm",
    "decompose_in_sublattice",
    "degree",
    "double_description",
    "dual_cone",
    "enumerate_semigroup",
    "express_in_generators",
    "faces",
    "find_face",
    "hilbert_basis",
    "is_regular_face",
    "lattice_points_up_to_degree",
    "pairing",
    "perp_lattice",
    "perp_semigroup",
    "rational_rank",
    "relative_interior_point",
    "semigroup_basis",
    "smith_normal_form",
    "solve_integer",
]
