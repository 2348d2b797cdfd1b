"""Semigroups of lattice points in cones: Hilbert bases and graded enumeration."""

import heapq
import logging
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import product
from math import floor
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from packages.lattice.cone import Cone, Face, check_face
from packages.lattice.smith import smith_normal_form
from packages.lattice.vectors import LatticeVector, add, is_zero, pairing, sub, vector
from packages.shared.exceptions import HilbertBasisOverflowError, NotInSemigroupError

logger = logging.getLogger(__name__)

DEFAULT_BOX_BOUND = 12
DEFAULT_MAX_CANDIDATES = 200_000
DEFAULT_MAX_BOX_POINTS = 2_000_000


@dataclass(frozen=True)
class SemigroupBasis:
    """Generators of the lattice points of a cone."""

    generators: Tuple[LatticeVector, ...]
    certified: bool
    grading: LatticeVector

    def degree(self, u: Sequence[int]) -> int:
        return pairing(self.grading, u)

    @property
    def max_degree(self) -> int:
        return max((self.degree(g) for g in self.generators), default=0)


def degree(grading: Sequence[int], u: Sequence[int]) -> int:
    return pairing(grading, u)


# ============================================================================
# Triangulation and fundamental parallelepipeds
# ============================================================================


def _pulling_triangulation(cone: Cone) -> List[Tuple[int, ...]]:
    """Simplicial cones (as ray-index tuples) covering ``cone``, using only its rays."""
    faces_by_set = cone.face_table
    memo: Dict[FrozenSet[int], List[Tuple[int, ...]]] = {}

    def triangulate(ray_set: FrozenSet[int]) -> List[Tuple[int, ...]]:
        if ray_set in memo:
            return memo[ray_set]
        face = faces_by_set[ray_set]
        if len(ray_set) == face.dim:
            result = [tuple(sorted(ray_set))]
        else:
            apex = min(ray_set)
            result = []
            for other_set, other in faces_by_set.items():
                if (
                    other.dim == face.dim - 1
                    and other_set < ray_set
                    and apex not in other_set
                ):
                    for simplex in triangulate(other_set):
                        result.append(tuple(sorted(simplex + (apex,))))
        memo[ray_set] = result
        return result

    return triangulate(frozenset(range(len(cone.rays))))


def _parallelepiped_points(generators: Sequence[LatticeVector]) -> Iterator[LatticeVector]:
    """
    Nonzero lattice points of ``{sum l_i g_i : 0 <= l_i < 1}``.

    The quotient Z^n / (generator lattice) is enumerated through the Smith form
    ``U V W = D``: representatives ``U^-1 y`` with ``0 <= y_i < d_i`` are folded
    back into the parallelepiped via ``lambda = W D^-1 y``.
    """
    n = len(generators)
    columns = [[g[i] for g in generators] for i in range(n)]
    snf = smith_normal_form(columns, n)
    factors = snf.invariant_factors
    for y in product(*[range(d) for d in factors]):
        if not any(y):
            continue
        scaled = [Fraction(y_i, d) for y_i, d in zip(y, factors)]
        lambdas = [sum(w * s for w, s in zip(row, scaled)) for row in snf.right]
        fractional = [lam - floor(lam) for lam in lambdas]
        point = [Fraction(0)] * n
        for lam, g in zip(fractional, generators):
            if lam:
                for i in range(n):
                    point[i] += lam * g[i]
        yield vector(int(c) for c in point)


def _volume(generators: Sequence[LatticeVector]) -> int:
    n = len(generators)
    result = 1
    for d in smith_normal_form([[g[i] for g in generators] for i in range(n)], n).invariant_factors:
        result *= d
    return result


def _irreducibles(cone: Cone, candidates: Set[LatticeVector]) -> List[LatticeVector]:
    """Candidates that are not another candidate plus a nonzero cone point."""
    grading = _grading_of(cone)
    degrees = {c: pairing(grading, c) for c in candidates}
    ordered = sorted(candidates, key=lambda c: (degrees[c], c))
    result = []
    for x in ordered:
        reducible = any(
            cone.contains(sub(x, y)) for y in ordered if degrees[y] < degrees[x]
        )
        if not reducible:
            result.append(x)
    return result


def _grading_of(cone: Cone) -> LatticeVector:
    """Sum of the facet normals: positive on every nonzero point of the cone."""
    return cone.dual.grading


def hilbert_basis(
    cone: Cone,
    box_bound: int = DEFAULT_BOX_BOUND,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> SemigroupBasis:
    """
    Minimal generating set of the lattice points of ``cone``.

    Passing the dual cone of ``sigma`` yields the generators of S_sigma. The
    primary method triangulates, enumerates fundamental parallelepipeds and
    keeps the irreducible candidates. When the parallelepipeds hold more than
    ``max_candidates`` points, a bounded scan up to degree ``box_bound`` is used
    instead and the result is marked uncertified.
    """
    grading = _grading_of(cone)
    simplices = _pulling_triangulation(cone)
    total = sum(_volume([cone.rays[i] for i in simplex]) for simplex in simplices)
    if total > max_candidates:
        logger.warning(
            f"Parallelepipeds hold {total} points (limit {max_candidates}); "
            f"falling back to degree {box_bound} scan"
        )
        points = lattice_points_up_to_degree(cone, box_bound)
        generators = _irreducibles(cone, set(points) - {tuple([0] * cone.ambient_rank)})
        return SemigroupBasis(generators=tuple(generators), certified=False, grading=grading)

    candidates: Set[LatticeVector] = set(cone.rays)
    for simplex in simplices:
        candidates.update(_parallelepiped_points([cone.rays[i] for i in simplex]))
    generators = _irreducibles(cone, candidates)
    logger.debug(
        f"Hilbert basis: {len(simplices)} simplicial cones, "
        f"{len(candidates)} candidates, {len(generators)} generators"
    )
    return SemigroupBasis(generators=tuple(generators), certified=True, grading=grading)


# ============================================================================
# Enumeration
# ============================================================================


def lattice_points_up_to_degree(
    cone: Cone, max_degree: int, max_points: int = DEFAULT_MAX_BOX_POINTS
) -> List[LatticeVector]:
    """
    Every lattice point of ``cone`` with degree at most ``max_degree``.

    Degree is the pairing with the sum of the facet normals. The polytope is
    scanned through its bounding box.

    Raises:
        HilbertBasisOverflowError: bounding box larger than ``max_points``
    """
    grading = _grading_of(cone)
    n = cone.ambient_rank
    low = [0] * n
    high = [0] * n
    for r in cone.rays:
        factor = Fraction(max_degree, pairing(grading, r))
        for i in range(n):
            low[i] = min(low[i], floor(factor * r[i]))
            high[i] = max(high[i], -floor(-factor * r[i]))
    size = 1
    for a, b in zip(low, high):
        size *= b - a + 1
    if size > max_points:
        raise HilbertBasisOverflowError(
            f"Bounding box of {size} points exceeds the limit of {max_points}",
            {"max_degree": max_degree},
        )
    points = [
        vector(coords)
        for coords in product(*[range(a, b + 1) for a, b in zip(low, high)])
        if pairing(grading, coords) <= max_degree and cone.contains(coords)
    ]
    return sorted(points, key=lambda p: (pairing(grading, p), p))


def enumerate_semigroup(
    generators: Sequence[LatticeVector], grading: Sequence[int], max_degree: int
) -> List[LatticeVector]:
    """
    Elements of the semigroup generated by ``generators`` up to ``max_degree``.

    Generators must have positive degree. Output is ordered by (degree, vector).
    """
    if not generators:
        return [] if max_degree < 0 else [tuple(0 for _ in grading)]
    start = tuple(0 for _ in generators[0])
    heap: List[Tuple[int, LatticeVector]] = [(0, start)]
    seen = {start}
    result = []
    while heap:
        deg, u = heapq.heappop(heap)
        result.append(u)
        for g in generators:
            nxt = add(u, g)
            nxt_deg = pairing(grading, nxt)
            if nxt_deg <= max_degree and nxt not in seen:
                seen.add(nxt)
                heapq.heappush(heap, (nxt_deg, nxt))
    return result


def express_in_generators(
    u: Sequence[int], basis: SemigroupBasis, dual: Cone
) -> Tuple[int, ...]:
    """
    Nonnegative coefficients writing ``u`` as a sum of generators.

    Every lattice point of the saturated cone ``dual`` is reached greedily: any
    generator with ``u - g`` still in the cone can be peeled off.

    Raises:
        NotInSemigroupError: u is not a lattice point of ``dual``
    """
    if not dual.contains(u):
        raise NotInSemigroupError(f"{list(u)} is not in the semigroup")
    coefficients = [0] * len(basis.generators)
    current = vector(u)
    while not is_zero(current):
        for index, g in enumerate(basis.generators):
            rest = sub(current, g)
            if dual.contains(rest):
                coefficients[index] += 1
                current = rest
                break
        else:
            raise NotInSemigroupError(f"{list(u)} is not generated by the basis")
    return tuple(coefficients)


# ============================================================================
# Faces of the dual
# ============================================================================


def perp_semigroup(
    cone: Cone, face: Face, basis: Optional[SemigroupBasis] = None
) -> Tuple[LatticeVector, ...]:
    """
    Generators of ``face⊥ ∩ S_cone``.

    Elements of a face of the dual cone decompose only into elements of that
    face, so filtering the Hilbert basis of the dual is enough.
    """
    check_face(cone, face)
    if basis is None:
        basis = semigroup_basis(cone)
    return tuple(g for g in basis.generators if face.is_perpendicular(g))


@lru_cache(maxsize=256)
def semigroup_basis(
    cone: Cone,
    box_bound: int = DEFAULT_BOX_BOUND,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> SemigroupBasis:
    """Hilbert basis of S_cone, cached per cone."""
    return hilbert_basis(cone.dual, box_bound, max_candidates)
