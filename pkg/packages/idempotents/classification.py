"""Idempotents of a root monoid, orbit by orbit."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from packages.actions.torus import ray_subtorus_action
from packages.demazure.roots import DemazureRoot
from packages.lattice.cone import Face, check_face
from packages.lattice.semigroup import perp_semigroup
from packages.lattice.smith import solve_integer
from packages.lattice.vectors import LatticeVector
from packages.monoid.point import (
    Point,
    character_value,
    distinguished_point,
    evaluate,
    sample_point,
    sample_point_trivial_on,
)
from packages.monoid.root_monoid import RootMonoid, multiply
from packages.shared.exceptions import EmptyLocusError, InconsistentPointError, PatternError
from packages.shared.rng import DEFAULT_RATIONAL_BOUND

logger = logging.getLogger(__name__)

OFF_LOCUS_ATTEMPTS = 50


class LocusCase(str, Enum):
    SINGLETON = "singleton"
    EMPTY = "empty"
    POSITIVE = "positive"


@dataclass(frozen=True)
class IdempotentLocus:
    """
    Idempotents in the orbit of ``gamma``.

    For a nonempty locus they are the points of the orbit with chi^u = 1 for
    every u in ``equations``; ``certificate`` explains an empty verdict.
    """

    gamma: Face
    case: LocusCase
    equations: Tuple[LatticeVector, ...] = ()
    witness: Optional[Point] = None
    certificate: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def is_empty(self) -> bool:
        return self.case == LocusCase.EMPTY

    def as_dict(self) -> Dict[str, Any]:
        return {
            "face": list(self.gamma.ray_indices),
            "case": self.case.value,
            "equations": [list(u) for u in self.equations],
            "witness": self.witness.as_dict() if self.witness else None,
            "certificate": self.certificate,
        }


def _root_pattern(X: RootMonoid, gamma: Face) -> List[Tuple[int, bool, bool]]:
    """(position in tau, e1 in gamma⊥, e2 in gamma⊥) for each ray of tau outside gamma."""
    pattern = []
    for r, index in enumerate(X.tau.ray_indices):
        if gamma.contains_ray(index):
            continue
        pattern.append((r, gamma.is_perpendicular(X.e1[r]), gamma.is_perpendicular(X.e2[r])))
    return pattern


def classify(X: RootMonoid, gamma: Face) -> IdempotentLocus:
    """Decide whether the orbit of ``gamma`` holds one, none or a family of idempotents."""
    check_face(X.sigma, gamma)
    if X.tau.is_subface_of(gamma):
        return IdempotentLocus(
            gamma=gamma,
            case=LocusCase.SINGLETON,
            equations=perp_semigroup(X.sigma, gamma, X.semigroup),
            witness=distinguished_point(gamma),
        )
    for r, first, second in _root_pattern(X, gamma):
        if first == second:
            condition = "both_roots_perpendicular" if first else "neither_root_perpendicular"
            return IdempotentLocus(
                gamma=gamma,
                case=LocusCase.EMPTY,
                certificate={"ray": X.tau.ray_indices[r], "condition": condition},
            )
    hull = X.sigma.face_hull(set(gamma.ray_indices) | set(X.tau.ray_indices))
    return IdempotentLocus(
        gamma=gamma,
        case=LocusCase.POSITIVE,
        equations=perp_semigroup(X.sigma, hull, X.semigroup),
        witness=distinguished_point(gamma),
        certificate={"hull": list(hull.ray_indices)},
    )


def classify_all(X: RootMonoid) -> List[IdempotentLocus]:
    return [classify(X, gamma) for gamma in X.sigma.faces]


def is_idempotent(X: RootMonoid, x: Point) -> bool:
    return multiply(X, x, x) == x


def satisfies_locus(locus: IdempotentLocus, x: Point) -> bool:
    """x lies in the orbit of the locus and meets all of its equations."""
    if locus.is_empty or x.face != locus.gamma:
        return False
    return all(evaluate(x, u) == 1 for u in locus.equations)


def closure_faces(X: RootMonoid, gamma: Face) -> List[Face]:
    """
    Orbits met by the closure of the idempotents of ``gamma``: the faces
    spanned by gamma and any subset of the rays of tau outside it.

    Raises:
        EmptyLocusError: the orbit holds no idempotents
    """
    locus = classify(X, gamma)
    if locus.is_empty:
        raise EmptyLocusError(f"No idempotents in the orbit of {gamma}", locus.certificate)
    outside = [i for i in X.tau.ray_indices if not gamma.contains_ray(i)]
    found = set()
    for size in range(len(outside) + 1):
        for subset in combinations(outside, size):
            found.add(X.sigma.face_hull(set(gamma.ray_indices) | set(subset)))
    return sorted(found, key=lambda face: (face.dim, face.ray_indices))


def h_gamma_roots(X: RootMonoid, gamma: Face) -> List[DemazureRoot]:
    """
    For every ray of tau outside gamma, the root of its pair lying in gamma⊥.

    Flowing the distinguished point of cone(tau, gamma) along these roots
    reaches every orbit listed by ``closure_faces``.

    Raises:
        PatternError: some ray has both or neither root in gamma⊥
    """
    roots = []
    for r, first, second in _root_pattern(X, gamma):
        if first == second:
            raise PatternError(
                f"Ray {X.tau.ray_indices[r]} has {'both' if first else 'neither'} roots in {gamma}⊥",
                {"ray": X.tau.ray_indices[r]},
            )
        pair = X.roots.pairs[r]
        roots.append(pair.e1 if first else pair.e2)
    return roots


def complementary_roots(X: RootMonoid, gamma: Face) -> List[DemazureRoot]:
    """The partner roots outside gamma⊥; flows along them do not reach the closure."""
    chosen = {root.vector for root in h_gamma_roots(X, gamma)}
    result = []
    for r, _, _ in _root_pattern(X, gamma):
        pair = X.roots.pairs[r]
        result.append(pair.e2 if pair.e1.vector in chosen else pair.e1)
    return result


# ============================================================================
# Sampling
# ============================================================================


def sample_locus_point(
    X: RootMonoid, locus: IdempotentLocus, rng: np.random.Generator, bound: int = DEFAULT_RATIONAL_BOUND
) -> Point:
    """Random idempotent of the orbit."""
    if locus.is_empty:
        raise EmptyLocusError(f"No idempotents in the orbit of {locus.gamma}", locus.certificate)
    return sample_point_trivial_on(locus.gamma, locus.equations, rng, bound)


def sample_off_locus_point(
    X: RootMonoid, locus: IdempotentLocus, rng: np.random.Generator, bound: int = DEFAULT_RATIONAL_BOUND
) -> Optional[Point]:
    """Random point of the orbit violating some equation, or None if every try met them all."""
    for _ in range(OFF_LOCUS_ATTEMPTS):
        x = sample_point(locus.gamma, rng, bound)
        if not satisfies_locus(locus, x):
            return x
    return None


def connecting_torus_element(
    X: RootMonoid, gamma: Face, x: Point, y: Point
) -> Optional[Dict[int, Fraction]]:
    """
    Parameters t_j, one per ray of tau outside gamma, with prod R_{p_j}(t_j) x = y.

    Each t_j is read off at a character u_j vanishing on gamma with
    <p_i, u_j> = delta_ij on the remaining rays of tau. Returns None when the
    two points are not joined by such a product.
    """
    if x.face != gamma or y.face != gamma:
        raise InconsistentPointError(f"Both points must lie in the orbit of {gamma}")
    outside = [i for i in X.tau.ray_indices if not gamma.contains_ray(i)]
    rows = [list(X.sigma.rays[i]) for i in outside] + [list(p) for p in gamma.rays]
    n = X.sigma.ambient_rank
    parameters: Dict[int, Fraction] = {}
    for j, index in enumerate(outside):
        rhs = [1 if i == j else 0 for i in range(len(outside))] + [0] * len(gamma.rays)
        u = solve_integer(rows, rhs, n)
        if u is None:
            raise PatternError(f"No dual vector isolates ray {index} over {gamma}")
        parameters[index] = character_value(y, u) / character_value(x, u)
    moved = x
    for index, t in parameters.items():
        moved = ray_subtorus_action(X.sigma.rays[index], t, moved)
    return parameters if moved == y else None
