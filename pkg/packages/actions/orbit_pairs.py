"""Pairs of orbits joined by a root subgroup, and their dynamic cross-check."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List

from packages.actions.root_subgroup import degenerate_parameter, root_subgroup_action
from packages.demazure.roots import DemazureRoot, is_demazure_root
from packages.lattice.cone import Cone, Face
from packages.monoid.point import sample_point
from packages.shared.exceptions import IncompatibleRootsError
from packages.shared.reporting import VerificationReport
from packages.shared.rng import DEFAULT_RATIONAL_BOUND, random_nonzero_rational, spawn_rngs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitPair:
    """O_{gamma1} flows into O_{gamma2} = O_{cone(gamma1, rho)} under H_e."""

    gamma1: Face
    gamma2: Face

    def as_dict(self) -> Dict[str, Any]:
        return {"gamma1": list(self.gamma1.ray_indices), "gamma2": list(self.gamma2.ray_indices)}


def he_connected_pairs(sigma: Cone, e: DemazureRoot) -> List[OrbitPair]:
    """Faces gamma with rho not in gamma, e in gamma⊥ and cone(gamma, rho) a face."""
    if is_demazure_root(sigma, e.vector) != e.ray_index:
        raise IncompatibleRootsError(
            f"{list(e.vector)} is not a Demazure root with ray {e.ray_index}",
            [{"vector": list(e.vector), "reason": "not_a_root"}],
        )
    table = sigma.face_table
    pairs = []
    for gamma in sigma.faces:
        if gamma.contains_ray(e.ray_index) or not gamma.is_perpendicular(e.vector):
            continue
        target = table.get(frozenset(gamma.ray_indices) | {e.ray_index})
        if target is not None:
            pairs.append(OrbitPair(gamma1=gamma, gamma2=target))
    return pairs


def verify_orbit_pairs(
    sigma: Cone,
    e: DemazureRoot,
    samples: int = 20,
    seed: int = 0,
    bound: int = DEFAULT_RATIONAL_BOUND,
) -> VerificationReport:
    """
    Flow sampled points of every orbit and compare with the combinatorial pairs.

    Sources jump to their partner exactly at the degenerate parameter and stay
    put otherwise; other orbits off the ray are fixed pointwise; orbits through
    the ray either stay or drop to a source paired with them.
    """
    report = VerificationReport(suite="orbit_pairs", seed=seed)
    pairs = he_connected_pairs(sigma, e)
    partner = {pair.gamma1: pair.gamma2 for pair in pairs}
    source_of = {pair.gamma2: pair.gamma1 for pair in pairs}
    faces = sigma.faces
    rngs = spawn_rngs(seed, samples * len(faces))
    for f, gamma in enumerate(faces):
        for s in range(samples):
            rng = rngs[f * samples + s]
            index = f * samples + s
            x = sample_point(gamma, rng, bound)
            a = random_nonzero_rational(rng, bound)
            inputs = {"gamma": gamma, "x": x, "a": a}
            if gamma in partner:
                degenerate = degenerate_parameter(e, x)
                landed = root_subgroup_action(e, degenerate, x) if degenerate is not None else x
                report.record("jump", index, landed.face == partner[gamma], inputs, partner[gamma], landed.face)
                if a != degenerate:
                    moved = root_subgroup_action(e, a, x)
                    report.record("stay", index, moved.face == gamma, inputs, gamma, moved.face)
            elif not gamma.contains_ray(e.ray_index):
                moved = root_subgroup_action(e, a, x)
                report.record("fixed", index, moved == x, inputs, x, moved)
            else:
                moved = root_subgroup_action(e, a, x)
                allowed = {gamma} | ({source_of[gamma]} if gamma in source_of else set())
                report.record(
                    "boundary",
                    index,
                    moved.face in allowed,
                    inputs,
                    sorted(str(face) for face in allowed),
                    str(moved.face),
                )
    logger.info(f"Orbit pair checks for {list(e.vector)}: {report.passed} passed, {report.failed} failed")
    return report
