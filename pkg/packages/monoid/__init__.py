"""Root monoids: points, the monoid product and the unit group."""

from .group import (
    GroupElement,
    beta_coordinates,
    from_point,
    group_identity,
    group_inverse,
    group_multiply,
    sample_group_element,
    sample_unit,
    to_point,
)
from .point import (
    Point,
    distinguished_point,
    evaluate,
    evaluate_local,
    make_point,
    point_coordinates,
    point_from_generator_values,
    point_in_basis,
    sample_point,
    sample_point_trivial_on,
)
from .root_monoid import (
    RootMonoid,
    build,
    inverse,
    is_active,
    is_commutative,
    is_invertible,
    multiply,
    product_value,
)
from .verification import random_point, verify_monoid

__all__ = [
    "GroupElement",
    "Point",
    "RootMonoid",
    "beta_coordinates",
    "build",
    "distinguished_point",
    "evaluate",
    "evaluate_local",
    "from_point",
    "group_identity",
    "group_inverse",
    "group_multiply",
    "inverse",
    "is_active",
    "is_commutative",
    "is_invertible",
    "make_point",
    "multiply",
    "point_coordinates",
    "point_from_generator_values",
    "point_in_basis",
    "product_value",
    "random_point",
    "sample_group_element",
    "sample_point",
    "sample_point_trivial_on",
    "sample_unit",
    "to_point",
    "verify_monoid",
]
