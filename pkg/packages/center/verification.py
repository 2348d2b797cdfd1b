"""Commutation oracle for the center and the cross-validation harness."""

import logging
from typing import List, Optional, Tuple

import numpy as np

from packages.center.equations import CenterLocus, center_equations, in_locus
from packages.lattice.cone import Face
from packages.lattice.vectors import LatticeVector, sub
from packages.monoid.group import GroupElement, sample_group_element, to_point
from packages.monoid.point import Point, sample_point, sample_point_trivial_on
from packages.monoid.root_monoid import RootMonoid, inverse, multiply
from packages.shared.exceptions import EmptyLocusError
from packages.shared.reporting import VerificationReport
from packages.shared.rng import DEFAULT_RATIONAL_BOUND, spawn_rngs

logger = logging.getLogger(__name__)

DEFAULT_DEGREE_BOUND = 8


def _witnesses(X: RootMonoid, samples: int, seed: int, bound: int) -> List[GroupElement]:
    """One-hot unipotent elements first, then mixed ones."""
    rngs = spawn_rngs(seed, samples + X.k)
    elements = [sample_group_element(X, rngs[r], "one_hot", index=r, bound=bound) for r in range(X.k)]
    elements.extend(sample_group_element(X, rng, "mixed", bound=bound) for rng in rngs[X.k:])
    return elements


def commutes_with(X: RootMonoid, x: Point, g: GroupElement) -> bool:
    """y x y^-1 = x for the unit y with coordinates g."""
    y = to_point(X, g)
    return multiply(X, multiply(X, y, x), inverse(X, y)) == x


def find_noncommuting_witness(
    X: RootMonoid, x: Point, samples: int = 100, seed: int = 0, bound: int = DEFAULT_RATIONAL_BOUND
) -> Optional[GroupElement]:
    """A sampled unit that does not commute with x, if any."""
    for g in _witnesses(X, samples, seed, bound):
        if not commutes_with(X, x, g):
            return g
    return None


def is_central(
    X: RootMonoid, x: Point, samples: int = 100, seed: int = 0, bound: int = DEFAULT_RATIONAL_BOUND
) -> bool:
    return find_noncommuting_witness(X, x, samples, seed, bound) is None


# ============================================================================
# Sampling on and off the locus
# ============================================================================


def _vanishing_faces(X: RootMonoid, locus: CenterLocus) -> List[Face]:
    """Orbits on which every vanishing character is zero."""
    return [
        face
        for face in X.sigma.faces
        if not any(face.is_perpendicular(u) for u in locus.vanishing)
    ]


def _locus_constraints(locus: CenterLocus, face: Face) -> Optional[List[LatticeVector]]:
    """
    Torus constraints chi^{lhs - rhs} = 1 on the orbit, or None if some
    equality has exactly one side vanishing there.
    """
    constraints = []
    for eq in locus.nontrivial_equalities:
        left = face.is_perpendicular(eq.lhs)
        right = face.is_perpendicular(eq.rhs)
        if left != right:
            return None
        if left:
            constraints.append(sub(eq.lhs, eq.rhs))
    return constraints


def locus_faces(X: RootMonoid, locus: CenterLocus) -> List[Tuple[Face, List[LatticeVector]]]:
    faces = []
    for face in _vanishing_faces(X, locus):
        constraints = _locus_constraints(locus, face)
        if constraints is not None:
            faces.append((face, constraints))
    return faces


def sample_center_point(
    X: RootMonoid,
    locus: CenterLocus,
    rng: np.random.Generator,
    bound: int = DEFAULT_RATIONAL_BOUND,
) -> Point:
    """
    Random point of the locus: pick an orbit where the vanishing conditions
    hold and no equality is half-zero, then impose the remaining equalities on the torus values.
    """
    faces = locus_faces(X, locus)
    if not faces:
        raise EmptyLocusError("The center locus meets no orbit")
    face, constraints = faces[int(rng.integers(0, len(faces)))]
    return sample_point_trivial_on(face, constraints, rng, bound)


def sample_vanishing_point(
    X: RootMonoid,
    locus: CenterLocus,
    rng: np.random.Generator,
    bound: int = DEFAULT_RATIONAL_BOUND,
) -> Point:
    """Random point satisfying the vanishing conditions only."""
    faces = _vanishing_faces(X, locus)
    return sample_point(faces[int(rng.integers(0, len(faces)))], rng, bound)


def center_cross_validate(
    X: RootMonoid,
    samples: int = 100,
    seed: int = 0,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    bound: int = DEFAULT_RATIONAL_BOUND,
    witness_samples: int = 20,
) -> VerificationReport:
    """
    Soundness: locus points commute with every sampled unit. Completeness at
    samples: points with the vanishing conditions but outside the locus have a
    non-commuting witness.
    """
    locus = center_equations(X, degree_bound)
    report = VerificationReport(suite="center", seed=seed)
    for index, rng in enumerate(spawn_rngs(seed, samples)):
        x = sample_center_point(X, locus, rng, bound)
        witness = find_noncommuting_witness(X, x, witness_samples, seed + index, bound)
        report.record("soundness", index, witness is None, {"x": x}, None, witness)

        y = sample_vanishing_point(X, locus, rng, bound)
        witness = find_noncommuting_witness(X, y, witness_samples, seed + index, bound)
        if in_locus(locus, y):
            report.record("soundness_vanishing", index, witness is None, {"x": y}, None, witness)
        else:
            report.record("completeness", index, witness is not None, {"x": y, "witness": witness}, "witness", None)
    logger.info(f"Center checks: {report.passed} passed, {report.failed} failed")
    return report
