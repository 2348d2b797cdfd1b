"""The unit group G(X) = U ⋊ T(tau) in coordinates (alpha, t)."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from packages.lattice.vectors import add, neg, scale
from packages.monoid.point import (
    Point,
    power_product,
    evaluate_local,
    orbit_lattice,
    point_from_generator_values,
)
from packages.monoid.root_monoid import RootMonoid, is_invertible
from packages.shared.exceptions import DimensionMismatchError, NotInvertibleError
from packages.shared.reporting import format_rational
from packages.shared.rng import DEFAULT_RATIONAL_BOUND, random_nonzero_rational


@dataclass(frozen=True)
class GroupElement:
    """
    Unipotent coordinates alpha in Q^k and a torus element of T(tau).

    ``torus`` holds the values of the character on the canonical basis of
    ``M ∩ tau⊥``.
    """

    alpha: Tuple[Fraction, ...]
    torus: Tuple[Fraction, ...]

    def as_dict(self) -> Dict[str, Any]:
        return {
            "alpha": [format_rational(a) for a in self.alpha],
            "torus": [format_rational(t) for t in self.torus],
        }


def torus_character(X: RootMonoid, torus: Sequence[Fraction], m: Sequence[int]) -> Fraction:
    """t(m) for m in M ∩ tau⊥."""
    return power_product(torus, orbit_lattice(X.tau).coordinates(m))


def twist(X: RootMonoid, torus: Sequence[Fraction], r: int) -> Fraction:
    """chi_r(t), the character by which T(tau) acts on the r-th unipotent coordinate."""
    return torus_character(X, torus, X.characters[r])


def _check(X: RootMonoid, g: GroupElement) -> None:
    if len(g.alpha) != X.k or len(g.torus) != len(orbit_lattice(X.tau).basis):
        raise DimensionMismatchError("Group element does not match the monoid")
    if any(t == 0 for t in g.torus):
        raise NotInvertibleError("Torus values must be nonzero")


def group_identity(X: RootMonoid) -> GroupElement:
    return GroupElement(
        alpha=tuple(Fraction(0) for _ in range(X.k)),
        torus=tuple(Fraction(1) for _ in orbit_lattice(X.tau).basis),
    )


def group_multiply(X: RootMonoid, g: GroupElement, h: GroupElement) -> GroupElement:
    """(alpha, t)(alpha', t') = (alpha + chi(t) alpha', t t')."""
    _check(X, g)
    _check(X, h)
    alpha = tuple(a + twist(X, g.torus, r) * b for r, (a, b) in enumerate(zip(g.alpha, h.alpha)))
    torus = tuple(s * t for s, t in zip(g.torus, h.torus))
    return GroupElement(alpha=alpha, torus=torus)


def group_inverse(X: RootMonoid, g: GroupElement) -> GroupElement:
    _check(X, g)
    torus = tuple(1 / t for t in g.torus)
    alpha = tuple(-a / twist(X, g.torus, r) for r, a in enumerate(g.alpha))
    return GroupElement(alpha=alpha, torus=torus)


def to_point(X: RootMonoid, g: GroupElement) -> Point:
    """
    The unit of X with the given coordinates.

    On a generator u: prod_r alpha_r^{<p_r,u>} * t(u + sum_r <p_r,u> e1_r).
    """
    _check(X, g)
    values = []
    for u in X.generators:
        degrees = X.tau_degrees(u)
        m = tuple(u)
        for d, e in zip(degrees, X.e1):
            if d:
                m = add(m, scale(d, e))
        values.append(power_product(g.alpha, degrees) * torus_character(X, g.torus, m))
    return point_from_generator_values(X.sigma, X.generators, values)


def from_point(X: RootMonoid, x: Point) -> GroupElement:
    """
    Coordinates of a unit: alpha_r = chi^{-e1_r}(x), t = x restricted to tau⊥.

    Raises:
        NotInvertibleError: x is outside X_tau
    """
    if not is_invertible(X, x):
        raise NotInvertibleError(f"{x} is not invertible")
    alpha = tuple(evaluate_local(x, neg(e)) for e in X.e1)
    torus = tuple(evaluate_local(x, b) for b in orbit_lattice(X.tau).basis)
    return GroupElement(alpha=alpha, torus=torus)


def beta_coordinates(X: RootMonoid, g: GroupElement) -> Tuple[Fraction, ...]:
    """Coordinates chi^{-e2_r}, i.e. alpha_r / chi_r(t)."""
    _check(X, g)
    return tuple(a / twist(X, g.torus, r) for r, a in enumerate(g.alpha))


def sample_group_element(
    X: RootMonoid,
    rng: np.random.Generator,
    mode: str = "mixed",
    index: Optional[int] = None,
    bound: int = DEFAULT_RATIONAL_BOUND,
) -> GroupElement:
    """
    Random unit coordinates.

    Modes: ``mixed`` (random alpha and torus), ``unipotent`` (t = 1) and
    ``one_hot`` (only alpha_index nonzero, t = 1).
    """
    rank = len(orbit_lattice(X.tau).basis)
    if mode == "mixed":
        alpha = tuple(random_nonzero_rational(rng, bound) for _ in range(X.k))
        torus = tuple(random_nonzero_rational(rng, bound) for _ in range(rank))
    elif mode == "unipotent":
        alpha = tuple(random_nonzero_rational(rng, bound) for _ in range(X.k))
        torus = tuple(Fraction(1) for _ in range(rank))
    elif mode == "one_hot":
        if index is None or not 0 <= index < X.k:
            raise DimensionMismatchError(f"one_hot needs an index in [0, {X.k})")
        alpha = tuple(
            random_nonzero_rational(rng, bound) if r == index else Fraction(0) for r in range(X.k)
        )
        torus = tuple(Fraction(1) for _ in range(rank))
    else:
        raise ValueError(f"Unknown sampling mode: {mode}")
    return GroupElement(alpha=alpha, torus=torus)


def sample_unit(X: RootMonoid, rng: np.random.Generator, bound: int = DEFAULT_RATIONAL_BOUND) -> Point:
    return to_point(X, sample_group_element(X, rng, "mixed", bound=bound))

