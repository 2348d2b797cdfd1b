"""Defining equations of the center of a root monoid."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import sympy as sp

from packages.lattice.semigroup import enumerate_semigroup, express_in_generators
from packages.lattice.vectors import LatticeVector, add, is_zero, scale, sub
from packages.monoid.point import Point, evaluate
from packages.monoid.root_monoid import RootMonoid, is_active
from packages.shared.exceptions import DegreeBoundError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CenterEquality:
    """chi^{u + e1_r} = chi^{u + e2_r} for an index u with <p_j, u> = delta_jr."""

    r: int
    u: LatticeVector
    lhs: LatticeVector
    rhs: LatticeVector

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> Dict[str, Any]:
        return {
            "r": self.r + 1,
            "u": list(self.u),
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
            "trivial": self.trivial,
        }


@dataclass(frozen=True)
class CenterLocus:
    vanishing: Tuple[LatticeVector, ...]
    equalities: Tuple[CenterEquality, ...]
    index_bound: int
    active: bool

    @property
    def nontrivial_equalities(self) -> Tuple[CenterEquality, ...]:
        return tuple(eq for eq in self.equalities if not eq.trivial)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "active": self.active,
            "index_bound": self.index_bound,
            "vanishing": [list(u) for u in self.vanishing],
            "equalities": [eq.as_dict() for eq in self.equalities],
        }


def twisted_degree(X: RootMonoid, u: Sequence[int]) -> LatticeVector:
    """sum_r <p_r, u> (e2_r - e1_r), the weight by which the unipotent part twists chi^u."""
    total = tuple(0 for _ in u)
    for d, c in zip(X.tau_degrees(u), X.characters):
        if d:
            total = add(total, scale(d, c))
    return total


def _vanishing(X: RootMonoid) -> Tuple[LatticeVector, ...]:
    """Generators of the ideal of characters with nonzero twisted degree."""
    return tuple(g for g in X.generators if not is_zero(twisted_degree(X, g)))


def _is_index(X: RootMonoid, u: LatticeVector, r: int) -> bool:
    """<p_r, u> >= 1 and chi^u is twisted exactly by chi_r."""
    return X.tau_degrees(u)[r] >= 1 and twisted_degree(X, u) == X.characters[r]


def _minimal(indices: List[LatticeVector], X: RootMonoid) -> List[LatticeVector]:
    """Drop u when u - u0 lies in S_sigma for a smaller index u0 of the same ray."""
    kept: List[LatticeVector] = []
    for u in indices:
        if not any(X.sigma.dual_contains(sub(u, v)) for v in kept):
            kept.append(u)
    return kept


def minimal_indices(X: RootMonoid, max_degree: int) -> List[List[LatticeVector]]:
    """Per ray of tau, the minimal indices of degree at most ``max_degree``."""
    elements = enumerate_semigroup(X.generators, X.semigroup.grading, max_degree)
    return [_minimal([u for u in elements if _is_index(X, u, r)], X) for r in range(X.k)]


def stable_degree_bound(X: RootMonoid, limit: int) -> int:
    """
    Smallest bound covering every minimal index found up to ``limit``.

    Raises:
        DegreeBoundError: a minimal index first appears at degree ``limit + 1``
    """
    degrees = [X.semigroup.degree(u) for indices in minimal_indices(X, limit + 1) for u in indices]
    if any(d > limit for d in degrees):
        raise DegreeBoundError(
            f"Center index set is not stable below degree {limit + 1}", {"limit": limit}
        )
    return max([X.semigroup.max_degree, *degrees])


def center_equations(X: RootMonoid, degree_bound: int) -> CenterLocus:
    """
    Vanishing conditions and equalities cutting out the center.

    A point x is central iff chi^m(x) = 0 whenever m has nonzero twisted
    degree, and chi^{u + e1_r}(x) = chi^{u + e2_r}(x) for every u in S_sigma
    with <p_r, u> >= 1 and twisted degree chi_r. The indices u are enumerated
    up to ``degree_bound`` and reduced to those that are not a smaller index
    plus an element of S_sigma; the reduced system must not change at
    ``degree_bound + 1``.

    Raises:
        DegreeBoundError: the bound is below the largest generator degree, or
            a new minimal index appears one degree above it
    """
    if degree_bound < X.semigroup.max_degree:
        raise DegreeBoundError(
            f"Degree bound {degree_bound} is below the largest generator degree {X.semigroup.max_degree}",
            {"degree_bound": degree_bound, "max_degree": X.semigroup.max_degree},
        )
    equalities = []
    for r, indices in enumerate(minimal_indices(X, degree_bound + 1)):
        for u in indices:
            if X.semigroup.degree(u) > degree_bound:
                raise DegreeBoundError(
                    f"Center equations change between degree {degree_bound} and {degree_bound + 1}",
                    {"degree_bound": degree_bound, "r": r + 1, "u": list(u)},
                )
            equalities.append(CenterEquality(r=r, u=u, lhs=add(u, X.e1[r]), rhs=add(u, X.e2[r])))
    active = is_active(X)
    locus = CenterLocus(
        vanishing=_vanishing(X),
        equalities=tuple(equalities),
        index_bound=degree_bound,
        active=active,
    )
    logger.info(
        f"Center ({'active' if active else 'non-active'}): {len(locus.vanishing)} vanishing, "
        f"{len(locus.nontrivial_equalities)} nontrivial equalities up to degree {degree_bound}"
    )
    return locus


def in_locus(locus: CenterLocus, x: Point) -> bool:
    if any(evaluate(x, u) != 0 for u in locus.vanishing):
        return False
    return all(evaluate(x, eq.lhs) == evaluate(x, eq.rhs) for eq in locus.equalities)


# ============================================================================
# Rendering
# ============================================================================


def coordinate_symbols(X: RootMonoid) -> List[sp.Symbol]:
    """x_i = chi^{q_i} for the semigroup generators q_i, in generator order."""
    return list(sp.symbols(f"x1:{len(X.generators) + 1}"))


def monomial(X: RootMonoid, u: Sequence[int]) -> sp.Expr:
    """chi^u written in the coordinates x_i."""
    symbols = coordinate_symbols(X)
    exponents = express_in_generators(u, X.semigroup, X.sigma.dual)
    return sp.prod(v**e for v, e in zip(symbols, exponents))


def render_locus(X: RootMonoid, locus: CenterLocus, include_trivial: bool = False) -> List[str]:
    """Equations of the center as strings such as ``x1 = 0`` or ``x3*x4 = x4**2``."""
    lines = [f"{sp.sstr(monomial(X, u))} = 0" for u in locus.vanishing]
    for eq in locus.equalities:
        if eq.trivial and not include_trivial:
            continue
        lines.append(f"{sp.sstr(monomial(X, eq.lhs))} = {sp.sstr(monomial(X, eq.rhs))}")
    return lines


def render_unit_equations(X: RootMonoid, equations: Sequence[Sequence[int]]) -> List[str]:
    """Equations chi^u = 1, as used by idempotent loci."""
    return [f"{sp.sstr(monomial(X, u))} = 1" for u in equations]
