"""Demazure roots and compatible root pairs."""

from .roots import (
    CompatibilityReport,
    DemazureRoot,
    DemazureRootPairSet,
    RootPair,
    compatible_pairs_with_differences,
    enumerate_roots,
    is_compatible_set,
    is_demazure_root,
    make_root,
    root_pair_set,
    zero_differences,
)

__all__ = [
    "CompatibilityReport",
    "DemazureRoot",
    "DemazureRootPairSet",
    "RootPair",
    "compatible_pairs_with_differences",
    "enumerate_roots",
    "is_compatible_set",
    "is_demazure_root",
    "make_root",
    "root_pair_set",
    "zero_differences",
]
