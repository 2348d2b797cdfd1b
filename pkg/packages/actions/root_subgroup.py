"""The additive one-parameter subgroup H_e attached to a Demazure root."""

import logging
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from packages.demazure.roots import DemazureRoot, is_demazure_root
from packages.lattice.cone import Face
from packages.lattice.semigroup import semigroup_basis
from packages.lattice.vectors import add, pairing, scale
from packages.monoid.point import Point, character_value, evaluate_local, point_from_generator_values
from packages.shared.exceptions import ChartError, IncompatibleRootsError

logger = logging.getLogger(__name__)


def _check_root(e: DemazureRoot, x: Point) -> Sequence[int]:
    if is_demazure_root(x.cone, e.vector) != e.ray_index:
        raise IncompatibleRootsError(
            f"{list(e.vector)} is not a Demazure root with ray {e.ray_index}",
            [{"vector": list(e.vector), "reason": "not_a_root"}],
        )
    return x.cone.rays[e.ray_index]


def root_subgroup_value(e: DemazureRoot, a: Fraction, x: Point, u: Sequence[int]) -> Fraction:
    """
    chi^u(H_e(a).x) = sum_k C(<rho,u>, k) a^k chi^{u + k e}(x).

    Every exponent stays in S_sigma, so the sum is defined on all of X and
    equals chi^u(x) (1 + a chi^e(x))^{<rho,u>} wherever chi^e is regular.
    """
    rho = _check_root(e, x)
    a = Fraction(a)
    d = pairing(rho, u)
    total = Fraction(0)
    for k in range(d + 1):
        value = character_value(x, add(u, scale(k, e.vector)) if k else tuple(u))
        if value:
            total += comb(d, k) * a**k * value
    return total


def root_subgroup_action(e: DemazureRoot, a: Fraction, x: Point) -> Point:
    """
    H_e(a).x, re-normalized by support inference.

    At the degenerate parameter ``1 + a chi^e(x) = 0`` the generator values
    vanish on a larger set and the point lands in the boundary orbit.
    """
    if Fraction(a) == 0:
        return x
    generators = semigroup_basis(x.cone).generators
    values = [root_subgroup_value(e, a, x, g) for g in generators]
    return point_from_generator_values(x.cone, generators, values)


def degenerate_parameter(e: DemazureRoot, x: Point) -> Optional[Fraction]:
    """
    The parameter a with 1 + a chi^e(x) = 0, or None when chi^e(x) = 0.

    Raises:
        ChartError: the distinguished ray lies in the orbit face of x
    """
    rho_index = e.ray_index
    _check_root(e, x)
    if x.face.contains_ray(rho_index):
        raise ChartError(f"chi^{list(e.vector)} is not regular on the orbit of {x.face}")
    value = evaluate_local(x, e.vector)
    if value == 0:
        return None
    return -1 / value


def observe_orbit_jump(e: DemazureRoot, x: Point) -> Optional[Face]:
    """Orbit face reached by flowing x to the degenerate parameter, if there is one."""
    if x.face.contains_ray(e.ray_index):
        return None
    a = degenerate_parameter(e, x)
    if a is None:
        return None
    landed = root_subgroup_action(e, a, x)
    logger.debug(f"H_e flow of {x} at a={a} lands in {landed.face}")
    return landed.face


def conjugated_parameter(e: DemazureRoot, p: Sequence[int], t: Fraction, a: Fraction) -> Fraction:
    """R_p(t)^-1 H_e(a) R_p(t) = H_e(a t^{<p,e>})."""
    return Fraction(a) * Fraction(t) ** pairing(p, e.vector)
