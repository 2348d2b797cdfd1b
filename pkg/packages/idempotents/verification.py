"""Sampling checks of the idempotent classification and of the closure structure."""

import logging
from fractions import Fraction
from typing import Optional, Sequence

from packages.actions.root_subgroup import root_subgroup_action
from packages.actions.torus import ray_subtorus_action
from packages.demazure.roots import DemazureRoot
from packages.idempotents.classification import (
    LocusCase,
    classify,
    classify_all,
    closure_faces,
    connecting_torus_element,
    h_gamma_roots,
    is_idempotent,
    sample_locus_point,
    sample_off_locus_point,
    satisfies_locus,
)
from packages.lattice.cone import Face
from packages.monoid.point import distinguished_point, sample_point
from packages.monoid.root_monoid import RootMonoid
from packages.shared.exceptions import EmptyLocusError
from packages.shared.reporting import VerificationReport
from packages.shared.rng import (
    DEFAULT_RATIONAL_BOUND,
    random_nonzero_rational,
    spawn_rngs,
)

logger = logging.getLogger(__name__)


def verify_orbit_structure(
    X: RootMonoid,
    gamma: Face,
    samples: int = 100,
    seed: int = 0,
    roots: Optional[Sequence[DemazureRoot]] = None,
    bound: int = DEFAULT_RATIONAL_BOUND,
) -> VerificationReport:
    """
    Check the structure of the idempotents in the orbit of ``gamma``.

    - ``torus_orbit``: ray-subtorus translates of x_gamma along tau satisfy the
      equations and are idempotent, and stay so under further translation.
    - ``single_orbit``: two sampled idempotents are joined by a ray-subtorus product.
    - ``closure``: flows of x_{cone(tau, gamma)} along ``roots`` (default
      ``h_gamma_roots``) land in an orbit from ``closure_faces`` and are idempotent.
      Samples cycle through every subset of roots flowed with parameter 0, so
      ``closure_coverage`` needs at least 2^len(roots) samples.
    - ``off_locus``: orbit points violating an equation are not idempotent.

    Raises:
        EmptyLocusError: the orbit holds no idempotents
    """
    locus = classify(X, gamma)
    if locus.is_empty:
        raise EmptyLocusError(f"No idempotents in the orbit of {gamma}", locus.certificate)
    if roots is None:
        roots = h_gamma_roots(X, gamma)
    allowed = set(closure_faces(X, gamma))
    hull = X.sigma.face_hull(set(gamma.ray_indices) | set(X.tau.ray_indices))
    start = distinguished_point(hull)
    report = VerificationReport(suite="idempotents", seed=seed)
    report.notes.append(f"face {gamma}: {locus.case.value}")
    reached = set()

    for index, rng in enumerate(spawn_rngs(seed, samples)):
        x = locus.witness
        for p in X.tau_rays:
            x = ray_subtorus_action(p, random_nonzero_rational(rng, bound), x)
        report.record(
            "torus_orbit",
            index,
            satisfies_locus(locus, x) and is_idempotent(X, x),
            {"x": x},
            True,
            False,
        )
        p = X.tau_rays[int(rng.integers(0, X.k))] if X.k else None
        if p is not None:
            moved = ray_subtorus_action(p, random_nonzero_rational(rng, bound), x)
            report.record("invariance", index, is_idempotent(X, moved), {"x": x, "p": list(p)}, True, False)

        y = sample_locus_point(X, locus, rng, bound)
        z = sample_locus_point(X, locus, rng, bound)
        report.record(
            "single_orbit",
            index,
            connecting_torus_element(X, gamma, y, z) is not None,
            {"y": y, "z": z},
            True,
            False,
        )

        # bit j of the sample index decides whether root j is skipped
        pattern = index % (1 << len(roots))
        flowed = start
        for j, root in enumerate(roots):
            a = Fraction(0) if (pattern >> j) & 1 else random_nonzero_rational(rng, bound)
            flowed = root_subgroup_action(root, a, flowed)
        reached.add(flowed.face)
        report.record(
            "closure",
            index,
            flowed.face in allowed and is_idempotent(X, flowed),
            {"x": flowed, "roots": [list(r.vector) for r in roots]},
            sorted(str(face) for face in allowed),
            str(flowed.face),
        )

        off = sample_off_locus_point(X, locus, rng, bound)
        if off is not None:
            report.record("off_locus", index, not is_idempotent(X, off), {"x": off}, False, True)

    report.record(
        "closure_coverage",
        samples,
        reached == allowed,
        {"roots": [list(r.vector) for r in roots]},
        sorted(str(face) for face in allowed),
        sorted(str(face) for face in reached),
    )
    logger.info(f"Idempotent checks on {gamma}: {report.passed} passed, {report.failed} failed")
    return report


def verify_classification(
    X: RootMonoid, samples: int = 100, seed: int = 0, bound: int = DEFAULT_RATIONAL_BOUND
) -> VerificationReport:
    """
    Sample every orbit: locus points are idempotent, empty orbits hold none, and
    every face in a closure is itself classified nonempty.
    """
    report = VerificationReport(suite="classification", seed=seed)
    loci = classify_all(X)
    rngs = spawn_rngs(seed, samples * len(loci))
    for f, locus in enumerate(loci):
        if locus.case == LocusCase.EMPTY:
            for s in range(samples):
                x = sample_point(locus.gamma, rngs[f * samples + s], bound)
                report.record("empty", f * samples + s, not is_idempotent(X, x), {"x": x}, False, True)
            continue
        for face in closure_faces(X, locus.gamma):
            report.record(
                "closure_nonempty",
                f,
                not classify(X, face).is_empty,
                {"gamma": locus.gamma, "face": face},
                "nonempty",
                "empty",
            )
        for s in range(samples):
            x = sample_locus_point(X, locus, rngs[f * samples + s], bound)
            report.record("locus", f * samples + s, is_idempotent(X, x), {"x": x}, True, False)
    logger.info(f"Classification checks: {report.passed} passed, {report.failed} failed")
    return report
