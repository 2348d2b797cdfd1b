"""Actions of the acting torus and of its one-parameter subgroups."""

from fractions import Fraction
from typing import Sequence

from packages.lattice.vectors import is_primitive, pairing
from packages.monoid.point import Point, power_product
from packages.shared.exceptions import DimensionMismatchError, NotInvertibleError


def ambient_torus_action(t: Sequence[Fraction], x: Point) -> Point:
    """
    Act by the torus element with character values ``t`` on the standard basis of M.

    chi^u(t.x) = t^u chi^u(x); the orbit face is unchanged.
    """
    if len(t) != x.cone.ambient_rank:
        raise DimensionMismatchError(f"Torus element needs {x.cone.ambient_rank} values, got {len(t)}")
    values = tuple(Fraction(v) for v in t)
    if any(v == 0 for v in values):
        raise NotInvertibleError("Torus element has a zero component")
    scaled = tuple(value * power_product(values, b) for value, b in zip(x.values, x.basis))
    return Point(face=x.face, basis=x.basis, values=scaled)


def ray_subtorus_action(p: Sequence[int], t: Fraction, x: Point) -> Point:
    """R_p(t): chi^u(R_p(t).x) = t^{<p,u>} chi^u(x)."""
    if len(p) != x.cone.ambient_rank:
        raise DimensionMismatchError(f"One-parameter subgroup {list(p)} has the wrong rank")
    if not is_primitive(p):
        raise DimensionMismatchError(f"One-parameter subgroup {list(p)} is not primitive")
    t = Fraction(t)
    if t == 0:
        raise NotInvertibleError("Ray subtorus parameter must be nonzero")
    scaled = tuple(value * t ** pairing(p, b) for value, b in zip(x.values, x.basis))
    return Point(face=x.face, basis=x.basis, values=scaled)


def is_fixed_by_ray(p: Sequence[int], x: Point) -> bool:
    """x is fixed by R_p exactly when p pairs to zero with its orbit lattice, i.e. p lies in span(face)."""
    return all(pairing(p, b) == 0 for b in x.basis)
