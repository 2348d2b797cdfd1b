"""Example root monoids with closed-form products."""

from .examples import (
    AFFINE_ACTIVE,
    AFFINE_NON_ACTIVE,
    QUADRIC_COORDINATES,
    QUADRIC_DEFAULT,
    QUADRIC_DEGENERATE,
    QUADRIC_PARALLEL,
    QUADRIC_PARAMETERS,
    QUADRIC_PRESETS,
    QUADRIC_RAYS,
    PresetSpec,
    affine_space_monoid,
    affine_space_product,
    build_preset,
    default_presets,
    quadric_cylinder_monoid,
    quadric_cylinder_product,
)

__all__ = [
    "AFFINE_ACTIVE",
    "AFFINE_NON_ACTIVE",
    "QUADRIC_COORDINATES",
    "QUADRIC_DEFAULT",
    "QUADRIC_DEGENERATE",
    "QUADRIC_PARALLEL",
    "QUADRIC_PARAMETERS",
    "QUADRIC_PRESETS",
    "QUADRIC_RAYS",
    "PresetSpec",
    "affine_space_monoid",
    "affine_space_product",
    "build_preset",
    "default_presets",
    "quadric_cylinder_monoid",
    "quadric_cylinder_product",
]
