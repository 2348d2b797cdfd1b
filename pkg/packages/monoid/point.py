"""Points of an affine toric variety as (orbit face, torus character) pairs."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from packages.lattice.cone import Cone, Face
from packages.lattice.smith import (
    PerpLattice,
    decompose_in_sublattice,
    perp_lattice,
    saturated_complement,
    solve_integer,
)
from packages.lattice.vectors import LatticeVector, pairing, vector
from packages.shared.exceptions import (
    ChartError,
    DimensionMismatchError,
    InconsistentPointError,
    NotInSemigroupError,
)
from packages.shared.reporting import format_rational
from packages.shared.rng import DEFAULT_RATIONAL_BOUND, random_nonzero_rational


def orbit_lattice(face: Face) -> PerpLattice:
    """Canonical basis of ``M ∩ face⊥`` shared by every point of the orbit."""
    return perp_lattice(face.rays, face.cone.ambient_rank)


@dataclass(frozen=True)
class Point:
    """
    A semigroup homomorphism S_sigma -> Q.

    The homomorphism is nonzero exactly on ``face⊥``; there it is the character
    taking ``values[l]`` on ``basis[l]``.
    """

    face: Face
    basis: Tuple[LatticeVector, ...]
    values: Tuple[Fraction, ...]

    @property
    def cone(self) -> Cone:
        return self.face.cone

    def as_dict(self) -> Dict[str, Any]:
        return {
            "face_rays": list(self.face.ray_indices),
            "basis": [list(b) for b in self.basis],
            "values": [format_rational(v) for v in self.values],
        }

    def __str__(self) -> str:
        shown = ", ".join(format_rational(v) for v in self.values)
        return f"Point({self.face}; [{shown}])"


def make_point(face: Face, values: Sequence[Fraction]) -> Point:
    """Point of the orbit of ``face`` with the given values on its canonical basis."""
    lattice = orbit_lattice(face)
    if len(values) != len(lattice.basis):
        raise DimensionMismatchError(
            f"Orbit of {face} needs {len(lattice.basis)} values, got {len(values)}"
        )
    fractions = tuple(Fraction(v) for v in values)
    if any(v == 0 for v in fractions):
        raise InconsistentPointError("Torus values must be nonzero")
    return Point(face=face, basis=lattice.basis, values=fractions)


def point_in_basis(face: Face, basis: Sequence[Sequence[int]], values: Sequence[Fraction]) -> Point:
    """Point given by values on an arbitrary lattice basis of ``M ∩ face⊥``."""
    canonical = orbit_lattice(face).basis
    given = [vector(b) for b in basis]
    if any(len(b) != face.cone.ambient_rank for b in given):
        raise DimensionMismatchError(f"Basis vectors must have rank {face.cone.ambient_rank}")
    if len(given) != len(canonical) or len(values) != len(given):
        raise DimensionMismatchError(
            f"Orbit of {face} needs a basis of {len(canonical)} vectors with one value each"
        )
    for b in given:
        if not face.is_perpendicular(b):
            raise InconsistentPointError(f"Basis vector {list(b)} is not orthogonal to {face}")
    converted = []
    for b in canonical:
        coefficients = decompose_in_sublattice(b, given)
        converted.append(power_product(values, coefficients))
    for b in given:
        decompose_in_sublattice(b, list(canonical))
    return make_point(face, converted)


def distinguished_point(face: Face) -> Point:
    """x_face: 1 on face⊥ and 0 elsewhere."""
    lattice = orbit_lattice(face)
    return Point(face=face, basis=lattice.basis, values=tuple(Fraction(1) for _ in lattice.basis))


def power_product(values: Sequence[Fraction], exponents: Sequence[int]) -> Fraction:
    result = Fraction(1)
    for value, exponent in zip(values, exponents):
        if exponent:
            result *= Fraction(value) ** exponent
    return result


def character_value(x: Point, u: Sequence[int]) -> Fraction:
    """chi^u(x) for u already known to be regular at x."""
    if not x.face.is_perpendicular(u):
        return Fraction(0)
    exponents = orbit_lattice(x.face).coordinates(u)
    return power_product(x.values, exponents)


def evaluate(x: Point, u: Sequence[int]) -> Fraction:
    """
    chi^u(x) for u in S_sigma.

    Raises:
        NotInSemigroupError: u is not in the dual cone
    """
    if len(u) != x.cone.ambient_rank:
        raise DimensionMismatchError(f"Character {list(u)} has the wrong rank")
    if not x.cone.dual_contains(u):
        raise NotInSemigroupError(f"{list(u)} is not in S_sigma")
    return character_value(x, u)


def evaluate_local(x: Point, u: Sequence[int]) -> Fraction:
    """
    chi^u(x) on the chart X_face containing x.

    The chart's semigroup is ``{u : <p, u> >= 0 for the rays p of face}``; characters
    outside it are not regular at x.

    Raises:
        ChartError: u not regular on the chart of x
    """
    if len(u) != x.cone.ambient_rank:
        raise DimensionMismatchError(f"Character {list(u)} has the wrong rank")
    if any(pairing(p, u) < 0 for p in x.face.rays):
        raise ChartError(f"chi^{list(u)} is not regular at points of the orbit of {x.face}")
    return character_value(x, u)


@lru_cache(maxsize=4096)
def _basis_in_generators(
    generators: Tuple[LatticeVector, ...], basis: Tuple[LatticeVector, ...], rank: int
) -> Tuple[Tuple[int, ...], ...]:
    columns = [[g[i] for g in generators] for i in range(rank)]
    expressions = []
    for b in basis:
        solution = solve_integer(columns, b, len(generators))
        if solution is None:
            raise InconsistentPointError(
                f"Basis vector {list(b)} is not generated by the nonzero generators"
            )
        expressions.append(solution)
    return tuple(expressions)


def point_from_generator_values(
    cone: Cone, generators: Sequence[LatticeVector], values: Sequence[Fraction]
) -> Point:
    """
    Recover a point from its values on a generating set of S_sigma.

    The orbit face is read off the support, torus values are solved on the
    orbit lattice, and every generator value is re-checked against the result.

    Raises:
        InconsistentPointError: values are not multiplicative on the relations
    """
    if len(generators) != len(values):
        raise DimensionMismatchError("One value per generator is required")
    support = [i for i, v in enumerate(values) if v != 0]
    face_rays = [
        j
        for j, p in enumerate(cone.rays)
        if all(pairing(p, generators[i]) == 0 for i in support)
    ]
    face = cone.face(face_rays)
    expected = [i for i, g in enumerate(generators) if face.is_perpendicular(g)]
    if expected != support:
        raise InconsistentPointError(
            "Zero pattern of generator values is not the pattern of an orbit",
            {"support": support, "orbit_support": expected},
        )
    lattice = orbit_lattice(face)
    support_generators = tuple(vector(generators[i]) for i in support)
    support_values = [Fraction(values[i]) for i in support]
    expressions = _basis_in_generators(support_generators, lattice.basis, cone.ambient_rank)
    torus = tuple(power_product(support_values, e) for e in expressions)
    point = Point(face=face, basis=lattice.basis, values=torus)
    for g, value in zip(support_generators, support_values):
        if character_value(point, g) != value:
            raise InconsistentPointError(
                f"Generator {list(g)} takes {value} but the solved character gives "
                f"{character_value(point, g)}",
                {"generator": list(g)},
            )
    return point


def point_coordinates(x: Point, generators: Sequence[LatticeVector]) -> Tuple[Fraction, ...]:
    """Values x_i = chi^{g_i}(x) on a list of semigroup elements."""
    return tuple(evaluate(x, g) for g in generators)


def sample_point(
    face: Face, rng: np.random.Generator, bound: int = DEFAULT_RATIONAL_BOUND
) -> Point:
    """Random point of the orbit of ``face`` with small rational torus values."""
    lattice = orbit_lattice(face)
    values = tuple(random_nonzero_rational(rng, bound) for _ in lattice.basis)
    return Point(face=face, basis=lattice.basis, values=values)


def sample_point_trivial_on(
    face: Face,
    vectors: Sequence[Sequence[int]],
    rng: np.random.Generator,
    bound: int = DEFAULT_RATIONAL_BOUND,
) -> Point:
    """
    Random point of the orbit with chi^u = 1 for every u in ``vectors``.

    The orbit lattice is split along the saturation of the span of ``vectors``;
    the character is 1 on that part and free on a complement, so every sampled
    point satisfies the conditions.
    """
    lattice = orbit_lattice(face)
    for u in vectors:
        if not face.is_perpendicular(u):
            raise InconsistentPointError(f"{list(u)} is not orthogonal to {face}")
    dimension = len(lattice.basis)
    coordinates = [lattice.coordinates(u) for u in vectors]
    pinned, coefficient_rows = saturated_complement(coordinates, dimension)
    free: List[Fraction] = [
        Fraction(1) if i < pinned else random_nonzero_rational(rng, bound)
        for i in range(dimension)
    ]
    values = tuple(
        power_product(free, [coefficient_rows[i][col] for i in range(dimension)])
        for col in range(dimension)
    )
    return Point(face=face, basis=lattice.basis, values=values)
