"""Root monoid structure on an affine toric variety."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from packages.demazure.roots import DemazureRootPairSet, is_compatible_set
from packages.lattice.cone import (
    Cone,
    Face,
    check_face,
    is_regular_face,
    rational_rank,
    relative_interior_point,
)
from packages.lattice.semigroup import SemigroupBasis, semigroup_basis
from packages.lattice.vectors import LatticeVector, add, neg, pairing, scale, sub
from packages.monoid.point import (
    Point,
    character_value,
    distinguished_point,
    evaluate,
    evaluate_local,
    point_from_generator_values,
)
from packages.shared.exceptions import (
    IncompatibleRootsError,
    NotInSemigroupError,
    NotInvertibleError,
    NotRegularFaceError,
)

logger = logging.getLogger(__name__)

# (binomial coefficient, exponent evaluated on the left factor, exponent on the right factor)
ProductTerm = Tuple[int, LatticeVector, LatticeVector]


@dataclass(frozen=True)
class RootMonoid:
    """A cone, a regular face and compatible roots, with everything derived from them."""

    sigma: Cone
    tau: Face
    roots: DemazureRootPairSet
    semigroup: SemigroupBasis
    characters: Tuple[LatticeVector, ...]
    neutral: Point
    interior: LatticeVector
    product_terms: Tuple[Tuple[ProductTerm, ...], ...] = field(compare=False, repr=False)

    @property
    def k(self) -> int:
        return len(self.tau.ray_indices)

    @property
    def tau_rays(self) -> Tuple[LatticeVector, ...]:
        return self.tau.rays

    @property
    def e1(self) -> Tuple[LatticeVector, ...]:
        return self.roots.e1

    @property
    def e2(self) -> Tuple[LatticeVector, ...]:
        return self.roots.e2

    @property
    def generators(self) -> Tuple[LatticeVector, ...]:
        return self.semigroup.generators

    def tau_degrees(self, u: Sequence[int]) -> Tuple[int, ...]:
        """The vector <p_bar, u> of pairings with the rays of tau."""
        return tuple(pairing(p, u) for p in self.tau_rays)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "cone": self.sigma.as_dict(),
            "tau": list(self.tau.ray_indices),
            "pairs": self.roots.as_dict()["pairs"],
        }


def expansion_terms(
    u: Sequence[int], tau_rays: Sequence[LatticeVector], e1: Sequence[LatticeVector], e2: Sequence[LatticeVector]
) -> Tuple[ProductTerm, ...]:
    """
    Terms of the comultiplication applied to chi^u.

    For every multi-index i in the box prod [0, <p_r, u>], with j = <p_bar, u> - i:
    C(<p_bar,u>, i) * chi^{u + i.e2} (x) chi^{u + j.e1}.
    """
    degrees = [pairing(p, u) for p in tau_rays]
    if any(d < 0 for d in degrees):
        raise NotInSemigroupError(f"{list(u)} pairs negatively with a ray of tau")
    terms: List[ProductTerm] = []
    for left_counts in product(*[range(d + 1) for d in degrees]):
        coefficient = 1
        left = tuple(u)
        right = tuple(u)
        for r, (d, i) in enumerate(zip(degrees, left_counts)):
            coefficient *= comb(d, i)
            if i:
                left = add(left, scale(i, e2[r]))
            if d - i:
                right = add(right, scale(d - i, e1[r]))
        terms.append((coefficient, left, right))
    return tuple(terms)


def build(
    sigma: Cone,
    tau: Face,
    roots: DemazureRootPairSet,
    basis: Optional[SemigroupBasis] = None,
) -> RootMonoid:
    """
    Validate the data and derive the monoid.

    Raises:
        NotRegularFaceError: tau is not a regular face
        IncompatibleRootsError: roots fail the compatibility conditions
    """
    check_face(sigma, tau)
    if not is_regular_face(sigma, tau):
        raise NotRegularFaceError(f"Face {tau} is not regular")
    report = is_compatible_set(sigma, tau, roots)
    if not report.compatible:
        raise IncompatibleRootsError("Root pairs are not compatible with tau", list(report.violations))
    if basis is None:
        basis = semigroup_basis(sigma)
    terms = tuple(expansion_terms(g, tau.rays, roots.e1, roots.e2) for g in basis.generators)
    monoid = RootMonoid(
        sigma=sigma,
        tau=tau,
        roots=roots,
        semigroup=basis,
        characters=roots.differences,
        neutral=distinguished_point(tau),
        interior=relative_interior_point(sigma, tau),
        product_terms=terms,
    )
    logger.info(
        f"Built root monoid: rank {sigma.ambient_rank}, k={monoid.k}, "
        f"{len(basis.generators)} semigroup generators"
    )
    return monoid


def _sum_terms(terms: Sequence[ProductTerm], x: Point, y: Point) -> Fraction:
    total = Fraction(0)
    for coefficient, left, right in terms:
        a = character_value(x, left)
        if a == 0:
            continue
        b = character_value(y, right)
        if b:
            total += coefficient * a * b
    return total


def product_value(X: RootMonoid, x: Point, y: Point, u: Sequence[int]) -> Fraction:
    """chi^u(x * y) from the defining sum, for any u in S_sigma."""
    if not X.sigma.dual_contains(u):
        raise NotInSemigroupError(f"{list(u)} is not in S_sigma")
    return _sum_terms(expansion_terms(u, X.tau_rays, X.e1, X.e2), x, y)


def multiply(X: RootMonoid, x: Point, y: Point) -> Point:
    """Product of two points: evaluate the comultiplication on the generators, then re-infer the orbit."""
    values = [_sum_terms(terms, x, y) for terms in X.product_terms]
    return point_from_generator_values(X.sigma, X.generators, values)


def is_invertible(X: RootMonoid, x: Point) -> bool:
    """x lies in the open chart X_tau, i.e. chi^{u'} does not vanish at x."""
    return evaluate(x, X.interior) != 0


def inverse(X: RootMonoid, y: Point) -> Point:
    """
    Inverse of a unit.

    chi^u(y^-1) = (-1)^{|<p_bar,u>|} chi^{-u - sum_r <p_r,u>(e1_r + e2_r)}(y), evaluated on
    the chart of y.

    Raises:
        NotInvertibleError: y is not in X_tau
    """
    if not is_invertible(X, y):
        raise NotInvertibleError(f"{y} is not invertible")
    values = []
    for g in X.generators:
        degrees = X.tau_degrees(g)
        exponent = neg(g)
        for d, a, b in zip(degrees, X.e1, X.e2):
            if d:
                exponent = sub(exponent, scale(d, add(a, b)))
        sign = -1 if sum(degrees) % 2 else 1
        values.append(sign * evaluate_local(y, exponent))
    return point_from_generator_values(X.sigma, X.generators, values)


def is_active(X: RootMonoid) -> bool:
    """The differences e2 - e1 are linearly independent over Q."""
    return rational_rank(list(X.characters)) == X.k


def is_commutative(X: RootMonoid) -> bool:
    return all(a == b for a, b in zip(X.e1, X.e2))
