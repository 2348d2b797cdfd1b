"""Randomized checks of the monoid axioms and of the group-coordinate formulas."""

import logging

import numpy as np

from packages.lattice.vectors import LatticeVector, add, zero
from packages.monoid.group import (
    from_point,
    group_inverse,
    group_multiply,
    sample_group_element,
    to_point,
)
from packages.monoid.point import Point, evaluate, sample_point
from packages.monoid.root_monoid import (
    RootMonoid,
    inverse,
    is_commutative,
    multiply,
    product_value,
)
from packages.shared.rng import DEFAULT_RATIONAL_BOUND, spawn_rngs
from packages.shared.reporting import VerificationReport

logger = logging.getLogger(__name__)


def random_point(X: RootMonoid, rng: np.random.Generator, bound: int = DEFAULT_RATIONAL_BOUND) -> Point:
    """Point of a uniformly chosen orbit."""
    faces = X.sigma.faces
    face = faces[int(rng.integers(0, len(faces)))]
    return sample_point(face, rng, bound)


def random_character(X: RootMonoid, rng: np.random.Generator, terms: int = 3) -> LatticeVector:
    """A random element of S_sigma built from a few generators."""
    u = zero(X.sigma.ambient_rank)
    for _ in range(terms):
        u = add(u, X.generators[int(rng.integers(0, len(X.generators)))])
    return u


def verify_monoid(
    X: RootMonoid, samples: int = 100, seed: int = 0, bound: int = DEFAULT_RATIONAL_BOUND
) -> VerificationReport:
    """
    Check associativity, the neutral element, inverses of units, agreement of
    the group law with the monoid product, and the product on random characters.
    """
    report = VerificationReport(suite="monoid", seed=seed)
    commutative = is_commutative(X)
    for index, rng in enumerate(spawn_rngs(seed, samples)):
        x, y, z = (random_point(X, rng, bound) for _ in range(3))
        xy = multiply(X, x, y)
        report.record(
            "associativity",
            index,
            multiply(X, xy, z) == multiply(X, x, multiply(X, y, z)),
            {"x": x, "y": y, "z": z},
            multiply(X, xy, z),
            multiply(X, x, multiply(X, y, z)),
        )
        report.record(
            "neutral",
            index,
            multiply(X, X.neutral, x) == x and multiply(X, x, X.neutral) == x,
            {"x": x},
            x,
            multiply(X, X.neutral, x),
        )
        u = random_character(X, rng)
        report.record(
            "product_character",
            index,
            evaluate(xy, u) == product_value(X, x, y, u),
            {"x": x, "y": y, "u": list(u)},
            product_value(X, x, y, u),
            evaluate(xy, u),
        )
        if commutative:
            report.record("commutativity", index, xy == multiply(X, y, x), {"x": x, "y": y}, xy, multiply(X, y, x))

        g = sample_group_element(X, rng, bound=bound)
        h = sample_group_element(X, rng, bound=bound)
        unit = to_point(X, g)
        report.record("coordinates", index, from_point(X, unit) == g, {"g": g}, g, from_point(X, unit))
        report.record(
            "group_law",
            index,
            to_point(X, group_multiply(X, g, h)) == multiply(X, unit, to_point(X, h)),
            {"g": g, "h": h},
            to_point(X, group_multiply(X, g, h)),
            multiply(X, unit, to_point(X, h)),
        )
        inv = inverse(X, unit)
        report.record(
            "inverse",
            index,
            multiply(X, unit, inv) == X.neutral and multiply(X, inv, unit) == X.neutral,
            {"y": unit},
            X.neutral,
            multiply(X, unit, inv),
        )
        report.record(
            "group_inverse",
            index,
            to_point(X, group_inverse(X, g)) == inv,
            {"g": g},
            inv,
            to_point(X, group_inverse(X, g)),
        )
    logger.info(f"Monoid checks: {report.passed} passed, {report.failed} failed")
    return report

