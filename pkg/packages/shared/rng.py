"""Seeded random generation for sampling points and parameters."""

from fractions import Fraction
from typing import List

import numpy as np

DEFAULT_RATIONAL_BOUND = 9


def make_rng(seed: int) -> np.random.Generator:
    """Create the root generator for a run."""
    return np.random.default_rng(np.random.SeedSequence(seed))


def spawn_rngs(seed: int, count: int) -> List[np.random.Generator]:
    """
    Create one independent generator per sample index.

    Samples drawn from child ``i`` do not depend on how many values the other
    children consumed, so reports stay stable if sampling order changes.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def random_nonzero_rational(
    rng: np.random.Generator, bound: int = DEFAULT_RATIONAL_BOUND
) -> Fraction:
    """Nonzero rational with numerator and denominator in [-bound, bound]."""
    numerator = int(rng.integers(1, bound + 1)) * (1 if rng.integers(0, 2) else -1)
    denominator = int(rng.integers(1, bound + 1)) * (1 if rng.integers(0, 2) else -1)
    return Fraction(numerator, denominator)

