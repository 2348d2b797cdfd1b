"""Strongly convex rational polyhedral cones, their duals and face lattices."""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from sympy import Matrix

from packages.lattice.smith import invariant_factors
from packages.lattice.vectors import (
    LatticeVector,
    add,
    is_primitive,
    is_zero,
    pairing,
    primitive,
    scale,
    vector,
    zero,
)
from packages.shared.exceptions import ConeError, FaceError, NotFullDimensionalError

logger = logging.getLogger(__name__)


def rational_rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals (0 for an empty list)."""
    if not vectors:
        return 0
    return int(Matrix([list(v) for v in vectors]).rank())


# ============================================================================
# Double description
# ============================================================================


@dataclass
class _Ray:
    vector: LatticeVector
    tight: Set[int]


def _initial_rays(constraints: Sequence[LatticeVector], chosen: List[int]) -> List[_Ray]:
    """Rays of the simplicial cone cut out by ``n`` independent constraints."""
    inverse = Matrix([list(constraints[i]) for i in chosen]).inv()
    n = len(chosen)
    rays = []
    for j in range(n):
        column = [inverse[i, j] for i in range(n)]
        denominator = lcm(*[int(value.q) for value in column])
        integral = vector(int(value * denominator) for value in column)
        rays.append(_Ray(primitive(integral), {chosen[i] for i in range(n) if i != j}))
    return rays


def double_description(constraints: Sequence[LatticeVector], n: int) -> List[LatticeVector]:
    """
    Extreme rays of ``{x : <a, x> >= 0 for every constraint a}``.

    Constraints are processed in their given order after an initial basis chosen
    greedily (lexicographic pivot order), so the output is reproducible. Rays
    are returned primitive and sorted lexicographically.

    Raises:
        NotFullDimensionalError: constraints do not have rank n
    """
    chosen: List[int] = []
    for index, row in enumerate(constraints):
        if rational_rank([constraints[i] for i in chosen] + [row]) > len(chosen):
            chosen.append(index)
        if len(chosen) == n:
            break
    if len(chosen) < n:
        raise NotFullDimensionalError(
            f"Cone generators span rank {len(chosen)}, ambient rank is {n}"
        )

    rays = _initial_rays(constraints, chosen)
    processed = set(chosen)
    for index, row in enumerate(constraints):
        if index in processed:
            continue
        values = [pairing(row, ray.vector) for ray in rays]
        positive = [ray for ray, v in zip(rays, values) if v > 0]
        negative = [(ray, v) for ray, v in zip(rays, values) if v < 0]
        kept = [ray for ray, v in zip(rays, values) if v >= 0]
        for ray, v in zip(rays, values):
            if v == 0:
                ray.tight = ray.tight | {index}
        created = []
        for plus in positive:
            plus_value = pairing(row, plus.vector)
            for minus, minus_value in negative:
                common = plus.tight & minus.tight
                if len(common) < n - 2:
                    continue
                adjacent = all(
                    not common <= other.tight
                    for other in rays
                    if other is not plus and other is not minus
                )
                if not adjacent:
                    continue
                combined = add(scale(plus_value, minus.vector), scale(-minus_value, plus.vector))
                created.append(_Ray(primitive(combined), common | {index}))
        rays = kept + created
        processed.add(index)

    unique = sorted({ray.vector for ray in rays})
    return unique


# ============================================================================
# Cones and faces
# ============================================================================


@dataclass(frozen=True)
class Face:
    """A face of a cone, identified by the indices of its rays."""

    cone: "Cone" = field(compare=False, repr=False)
    ray_indices: Tuple[int, ...]
    rays: Tuple[LatticeVector, ...]
    supporting_functional: LatticeVector = field(compare=False)
    dim: int = field(compare=False)

    def contains_ray(self, index: int) -> bool:
        return index in self.ray_indices

    def is_subface_of(self, other: "Face") -> bool:
        return set(self.ray_indices) <= set(other.ray_indices)

    def is_perpendicular(self, u: Sequence[int]) -> bool:
        """True iff u lies in the orthogonal complement of the face."""
        return all(pairing(p, u) == 0 for p in self.rays)

    def as_dict(self) -> Dict[str, List[int]]:
        return {"rays": list(self.ray_indices)}

    def __str__(self) -> str:
        return f"cone({', '.join(f'p{i + 1}' for i in self.ray_indices)})"


@dataclass(frozen=True)
class Cone:
    """
    Full-dimensional, strongly convex cone given by its primitive extreme rays.

    Use ``Cone.from_rays`` for validated construction and ``Cone.from_generators``
    to normalize an arbitrary generating set first.
    """

    rays: Tuple[LatticeVector, ...]
    facet_normals: Tuple[LatticeVector, ...] = field(compare=False, repr=False)

    @property
    def ambient_rank(self) -> int:
        return len(self.rays[0])

    @property
    def dim(self) -> int:
        return self.ambient_rank

    @classmethod
    def from_rays(cls, rays: Iterable[Sequence[int]]) -> "Cone":
        """
        Validate rays and compute facet normals.

        Raises:
            ConeError: empty, non-primitive, repeated or redundant rays, or a cone containing a line
            NotFullDimensionalError: rays do not span the ambient space
        """
        ray_list = [vector(r) for r in rays]
        if not ray_list:
            raise ConeError("A cone needs at least one ray")
        n = len(ray_list[0])
        if n == 0 or any(len(r) != n for r in ray_list):
            raise ConeError("All rays must have the same positive rank")
        for r in ray_list:
            if not is_primitive(r):
                raise ConeError(f"Ray {list(r)} is not primitive")
        if len(set(ray_list)) != len(ray_list):
            raise ConeError("Rays must be distinct")

        normals = tuple(double_description(ray_list, n))
        interior = zero(n)
        for m in normals:
            interior = add(interior, m)
        for r in ray_list:
            if pairing(r, interior) <= 0:
                raise ConeError(f"Cone contains a line through ray {list(r)}")
            tight = [m for m in normals if pairing(r, m) == 0]
            if rational_rank(tight) != n - 1:
                raise ConeError(f"Ray {list(r)} is not an extreme ray")
        return cls(rays=tuple(ray_list), facet_normals=normals)

    @classmethod
    def from_generators(cls, generators: Iterable[Sequence[int]]) -> "Cone":
        """Build a cone from any generating set, dropping redundant generators."""
        candidates: List[LatticeVector] = []
        for g in generators:
            p = primitive(vector(g))
            if not is_zero(p) and p not in candidates:
                candidates.append(p)
        if not candidates:
            raise ConeError("A cone needs at least one nonzero generator")
        n = len(candidates[0])
        normals = double_description(candidates, n)
        extreme = [
            r
            for r in candidates
            if rational_rank([m for m in normals if pairing(r, m) == 0]) == n - 1
        ]
        return cls.from_rays(extreme)

    def contains(self, v: Sequence[int]) -> bool:
        return all(pairing(v, m) >= 0 for m in self.facet_normals)

    def dual_contains(self, u: Sequence[int]) -> bool:
        """Membership in the dual cone, tested against the rays."""
        return all(pairing(p, u) >= 0 for p in self.rays)

    def tight_normals(self, ray_indices: Iterable[int]) -> List[int]:
        """Indices of facets containing every given ray."""
        indices = list(ray_indices)
        return [
            j
            for j, m in enumerate(self.facet_normals)
            if all(pairing(self.rays[i], m) == 0 for i in indices)
        ]

    @cached_property
    def _facet_ray_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(
            frozenset(i for i, r in enumerate(self.rays) if pairing(r, m) == 0)
            for m in self.facet_normals
        )

    def _make_face(self, ray_set: FrozenSet[int]) -> Face:
        indices = tuple(sorted(ray_set))
        functional = zero(self.ambient_rank)
        for j, facet_rays in enumerate(self._facet_ray_sets):
            if ray_set <= facet_rays:
                functional = add(functional, self.facet_normals[j])
        rays = tuple(self.rays[i] for i in indices)
        return Face(
            cone=self,
            ray_indices=indices,
            rays=rays,
            supporting_functional=functional,
            dim=rational_rank(rays),
        )

    @cached_property
    def face_table(self) -> Dict[FrozenSet[int], Face]:
        """All faces keyed by ray-index set, from recursive facet intersection."""
        full = frozenset(range(len(self.rays)))
        seen: Set[FrozenSet[int]] = {full}
        frontier = [full]
        while frontier:
            current = frontier.pop()
            for facet_rays in self._facet_ray_sets:
                smaller = current & facet_rays
                if smaller not in seen:
                    seen.add(smaller)
                    frontier.append(smaller)
        faces = {ray_set: self._make_face(ray_set) for ray_set in seen}
        logger.debug(f"Enumerated {len(faces)} faces of a rank {self.ambient_rank} cone")
        return faces

    @property
    def faces(self) -> List[Face]:
        return sorted(self.face_table.values(), key=lambda f: (f.dim, f.ray_indices))

    def face(self, ray_indices: Iterable[int]) -> Face:
        """Look up the face with exactly the given rays."""
        key = frozenset(ray_indices)
        found = self.face_table.get(key)
        if found is None:
            raise FaceError(f"Rays {sorted(key)} do not span a face")
        return found

    def face_hull(self, ray_indices: Iterable[int]) -> Face:
        """Smallest face containing the given rays."""
        key = frozenset(ray_indices)
        hull = frozenset(range(len(self.rays)))
        for facet_rays in self._facet_ray_sets:
            if key <= facet_rays:
                hull = hull & facet_rays
        return self.face_table[hull]

    @property
    def zero_face(self) -> Face:
        return self.face(())

    @property
    def full_face(self) -> Face:
        return self.face(range(len(self.rays)))

    @cached_property
    def dual(self) -> "Cone":
        return dual_cone(self)

    @cached_property
    def grading(self) -> LatticeVector:
        """Sum of the rays; strictly positive on the dual cone minus the origin."""
        total = zero(self.ambient_rank)
        for r in self.rays:
            total = add(total, r)
        return total

    def as_dict(self) -> Dict[str, object]:
        return {"rank": self.ambient_rank, "rays": [list(r) for r in self.rays]}


def dual_cone(cone: Cone) -> Cone:
    """The dual cone, whose rays are the primitive facet normals."""
    return Cone(rays=cone.facet_normals, facet_normals=cone.rays)


def faces(cone: Cone) -> List[Face]:
    return cone.faces


def check_face(cone: Cone, face: Face) -> None:
    if face.cone is not cone and face.cone != cone:
        raise FaceError(f"Face {face} does not belong to this cone")


def is_regular_face(cone: Cone, face: Face) -> bool:
    """True iff the face rays extend to a lattice basis."""
    check_face(cone, face)
    if not face.rays:
        return True
    factors = invariant_factors(face.rays, cone.ambient_rank)
    return len(factors) == len(face.rays) and all(d == 1 for d in factors)


def relative_interior_point(cone: Cone, face: Face) -> LatticeVector:
    """
    Point in the relative interior of the dual face ``face⊥ ∩ cone∨``.

    It pairs to zero with the rays of ``face`` and positively with the other rays.
    """
    check_face(cone, face)
    total = zero(cone.ambient_rank)
    for m in cone.facet_normals:
        if face.is_perpendicular(m):
            total = add(total, m)
    return total


def find_face(cone: Cone, rays: Sequence[Sequence[int]]) -> Optional[Face]:
    """Face spanned by the given ray vectors, if they are rays of a face."""
    try:
        indices = [cone.rays.index(vector(r)) for r in rays]
    except ValueError:
        return None
    try:
        return cone.face(indices)
    except FaceError:
        return None
