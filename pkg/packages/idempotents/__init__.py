"""Idempotents of root monoids: classification per orbit and closure structure."""

from .classification import (
    IdempotentLocus,
    LocusCase,
    classify,
    classify_all,
    closure_faces,
    complementary_roots,
    connecting_torus_element,
    h_gamma_roots,
    is_idempotent,
    sample_locus_point,
    sample_off_locus_point,
    satisfies_locus,
)
from .verification import verify_classification, verify_orbit_structure

__all__ = [
    "IdempotentLocus",
    "LocusCase",
    "classify",
    "classify_all",
    "closure_faces",
    "complementary_roots",
    "connecting_torus_element",
    "h_gamma_roots",
    "is_idempotent",
    "sample_locus_point",
    "sample_off_locus_point",
    "satisfies_locus",
    "verify_classification",
    "verify_orbit_structure",
]
