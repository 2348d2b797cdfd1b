"""Demazure roots of a cone and compatible root pairs for a regular face."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from packages.lattice.cone import Cone, Face, check_face, is_regular_face, relative_interior_point
from packages.lattice.semigroup import enumerate_semigroup, perp_semigroup, semigroup_basis
from packages.lattice.smith import solve_integer
from packages.lattice.vectors import (
    LatticeVector,
    add,
    pairing,
    scale,
    sub,
    vector,
    vectors_in_box,
    vectors_of_max_norm,
)
from packages.shared.exceptions import (
    DimensionMismatchError,
    IncompatibleRootsError,
    NotRegularFaceError,
    SublatticeError,
)

logger = logging.getLogger(__name__)

KRONECKER_SEARCH_RADIUS = 3


@dataclass(frozen=True)
class DemazureRoot:
    vector: LatticeVector
    ray_index: int

    def as_dict(self) -> Dict[str, Any]:
        return {"vector": list(self.vector), "ray": self.ray_index}


@dataclass(frozen=True)
class RootPair:
    e1: DemazureRoot
    e2: DemazureRoot

    @property
    def difference(self) -> LatticeVector:
        """e2 - e1, the weight of the twisting character."""
        return sub(self.e2.vector, self.e1.vector)

    def swapped(self) -> "RootPair":
        return RootPair(e1=self.e2, e2=self.e1)


@dataclass(frozen=True)
class DemazureRootPairSet:
    """Root pairs indexed by the rays of a regular face, in ray-index order."""

    tau_indices: Tuple[int, ...]
    pairs: Tuple[RootPair, ...]

    @property
    def differences(self) -> Tuple[LatticeVector, ...]:
        return tuple(pair.difference for pair in self.pairs)

    @property
    def e1(self) -> Tuple[LatticeVector, ...]:
        return tuple(pair.e1.vector for pair in self.pairs)

    @property
    def e2(self) -> Tuple[LatticeVector, ...]:
        return tuple(pair.e2.vector for pair in self.pairs)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "tau_rays": list(self.tau_indices),
            "pairs": [{"e1": list(p.e1.vector), "e2": list(p.e2.vector)} for p in self.pairs],
        }


@dataclass(frozen=True)
class CompatibilityReport:
    """Outcome of a compatibility check; violations name the failing (r, s)."""

    compatible: bool
    violations: Tuple[Dict[str, Any], ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.compatible


# ============================================================================
# Roots
# ============================================================================


def is_demazure_root(cone: Cone, e: Sequence[int]) -> Optional[int]:
    """Index of the distinguished ray when ``e`` is a Demazure root."""
    values = [pairing(p, e) for p in cone.rays]
    minus_one = [i for i, v in enumerate(values) if v == -1]
    if len(minus_one) != 1:
        return None
    if any(v < 0 for i, v in enumerate(values) if i != minus_one[0]):
        return None
    return minus_one[0]


def make_root(cone: Cone, e: Sequence[int]) -> DemazureRoot:
    """Wrap a vector as a DemazureRoot, rejecting non-roots."""
    index = is_demazure_root(cone, e)
    if index is None:
        raise IncompatibleRootsError(
            f"{list(e)} is not a Demazure root", [{"vector": list(e), "reason": "not_a_root"}]
        )
    return DemazureRoot(vector=vector(e), ray_index=index)


def enumerate_roots(cone: Cone, ray_index: int, bound: int) -> List[DemazureRoot]:
    """
    Roots with distinguished ray ``ray_index`` and max-norm at most ``bound``.

    The coordinate where the ray has the smallest nonzero entry is solved for,
    so only a box of one dimension less is scanned.
    """
    p = cone.rays[ray_index]
    n = cone.ambient_rank
    pivot = min((i for i in range(n) if p[i] != 0), key=lambda i: (abs(p[i]), i))
    others = [i for i in range(n) if i != pivot]
    found = []
    for partial in vectors_in_box(len(others), bound):
        rest = -1 - sum(p[i] * c for i, c in zip(others, partial))
        if rest % p[pivot]:
            continue
        value = rest // p[pivot]
        if abs(value) > bound:
            continue
        coords = [0] * n
        coords[pivot] = value
        for i, c in zip(others, partial):
            coords[i] = c
        e = tuple(coords)
        if is_demazure_root(cone, e) == ray_index:
            found.append(DemazureRoot(vector=e, ray_index=ray_index))
    return sorted(found, key=lambda root: root.vector)


# ============================================================================
# Compatibility
# ============================================================================


def is_compatible_set(cone: Cone, tau: Face, roots: DemazureRootPairSet) -> CompatibilityReport:
    """Check the Kronecker conditions and root membership of every vector."""
    check_face(cone, tau)
    violations: List[Dict[str, Any]] = []
    if tuple(roots.tau_indices) != tau.ray_indices:
        violations.append(
            {"reason": "tau_mismatch", "expected": list(tau.ray_indices), "actual": list(roots.tau_indices)}
        )
    if len(roots.pairs) != len(tau.ray_indices):
        violations.append(
            {"reason": "pair_count", "expected": len(tau.ray_indices), "actual": len(roots.pairs)}
        )
        return CompatibilityReport(False, tuple(violations))

    for r, pair in enumerate(roots.pairs):
        for label, root in (("e1", pair.e1), ("e2", pair.e2)):
            if is_demazure_root(cone, root.vector) is None:
                violations.append({"reason": "not_a_root", "r": r + 1, "root": label, "vector": list(root.vector)})
            for s, index in enumerate(tau.ray_indices):
                value = pairing(cone.rays[index], root.vector)
                expected = -1 if r == s else 0
                if value != expected:
                    violations.append(
                        {"reason": "kronecker", "r": r + 1, "s": s + 1, "root": label, "pairing": value, "expected": expected}
                    )
    return CompatibilityReport(not violations, tuple(violations))


def _kronecker_solution(tau_rays: Sequence[LatticeVector], r: int, n: int) -> LatticeVector:
    """Minimal max-norm u with <p_s, u> = -delta_rs; ties broken lexicographically."""
    rhs = [-1 if s == r else 0 for s in range(len(tau_rays))]

    def satisfies(u: LatticeVector) -> bool:
        return all(pairing(p, u) == b for p, b in zip(tau_rays, rhs))

    for radius in range(1, KRONECKER_SEARCH_RADIUS + 1):
        for u in vectors_of_max_norm(n, radius):
            if satisfies(u):
                return u
    solution = solve_integer([list(p) for p in tau_rays], rhs, n)
    if solution is None:
        raise NotRegularFaceError("Face rays do not admit dual Kronecker vectors")
    return solution


def _minimal_shift(cone: Cone, tau: Face, u: LatticeVector, v: LatticeVector) -> int:
    """Smallest N >= 0 with <q, u + N v> >= 0 for every ray q outside tau."""
    needed = 0
    for index, q in enumerate(cone.rays):
        if tau.contains_ray(index):
            continue
        deficit = -pairing(q, u)
        step = pairing(q, v)
        if deficit > 0:
            needed = max(needed, -(-deficit // step))
    return needed


def compatible_pairs_with_differences(
    cone: Cone, tau: Face, differences: Sequence[Sequence[int]]
) -> DemazureRootPairSet:
    """
    Construct compatible pairs with ``e1 - e2 = c_r`` for the given vectors.

    For each ray p_r of tau: solve the Kronecker system for u_r, push it into
    the root set along the relative interior vector v of the dual face, then
    search the dual face semigroup by degree for the smallest shift w with both
    ``u_r + N v + w`` and ``u_r + N v + w - c_r`` roots.

    Raises:
        NotRegularFaceError: tau is not regular
        SublatticeError: some c_r is not orthogonal to tau
    """
    check_face(cone, tau)
    if not is_regular_face(cone, tau):
        raise NotRegularFaceError(f"Face {tau} is not regular")
    k = len(tau.ray_indices)
    if len(differences) != k:
        raise DimensionMismatchError(f"Expected {k} differences, got {len(differences)}")
    n = cone.ambient_rank
    for c in differences:
        if len(c) != n:
            raise DimensionMismatchError(f"Difference {list(c)} does not have rank {n}")
        if not tau.is_perpendicular(c):
            raise SublatticeError(f"Difference {list(c)} is not orthogonal to {tau}")

    tau_rays = [cone.rays[i] for i in tau.ray_indices]
    v = relative_interior_point(cone, tau)
    basis = semigroup_basis(cone)
    face_generators = perp_semigroup(cone, tau, basis)

    pairs = []
    for r, c in enumerate(differences):
        c = vector(c)
        u = _kronecker_solution(tau_rays, r, n)
        base = add(u, scale(_minimal_shift(cone, tau, u, v), v))
        fallback_shift = scale(_minimal_shift(cone, tau, sub(base, c), v), v)
        ceiling = basis.degree(fallback_shift)
        shift = fallback_shift
        for w in enumerate_semigroup(face_generators, basis.grading, ceiling):
            if is_demazure_root(cone, sub(add(base, w), c)) is not None:
                shift = w
                break
        e1 = add(base, shift)
        e2 = sub(e1, c)
        pairs.append(
            RootPair(
                e1=DemazureRoot(vector=e1, ray_index=tau.ray_indices[r]),
                e2=DemazureRoot(vector=e2, ray_index=tau.ray_indices[r]),
            )
        )
        logger.debug(f"Pair {r + 1}: e1={e1} e2={e2} (difference {c}, shift {shift})")
    return DemazureRootPairSet(tau_indices=tau.ray_indices, pairs=tuple(pairs))


def root_pair_set(
    tau: Face, vectors: Sequence[Tuple[Sequence[int], Sequence[int]]]
) -> DemazureRootPairSet:
    """Assemble a pair set from raw (e1, e2) vectors; compatibility is checked separately."""
    if len(vectors) != len(tau.ray_indices):
        raise DimensionMismatchError(
            f"Expected {len(tau.ray_indices)} root pairs, got {len(vectors)}"
        )
    pairs = tuple(
        RootPair(e1=DemazureRoot(vector(e1), index), e2=DemazureRoot(vector(e2), index))
        for (e1, e2), index in zip(vectors, tau.ray_indices)
    )
    return DemazureRootPairSet(tau_indices=tau.ray_indices, pairs=pairs)


def zero_differences(cone: Cone, tau: Face) -> List[LatticeVector]:
    return [tuple([0] * cone.ambient_rank) for _ in tau.ray_indices]

