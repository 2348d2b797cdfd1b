"""Torus, ray-subtorus and root-subgroup actions on points."""

from .orbit_pairs import OrbitPair, he_connected_pairs, verify_orbit_pairs
from .root_subgroup import (
    conjugated_parameter,
    degenerate_parameter,
    observe_orbit_jump,
    root_subgroup_action,
    root_subgroup_value,
)
from .torus import ambient_torus_action, is_fixed_by_ray, ray_subtorus_action

__all__ = [
    "OrbitPair",
    "ambient_torus_action",
    "conjugated_parameter",
    "degenerate_parameter",
    "he_connected_pairs",
    "is_fixed_by_ray",
    "observe_orbit_jump",
    "ray_subtorus_action",
    "root_subgroup_action",
    "root_subgroup_value",
    "verify_orbit_pairs",
]
