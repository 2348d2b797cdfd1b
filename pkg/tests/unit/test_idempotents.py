from fractions import Fraction

import pytest

from packages.idempotents.classification import (
    LocusCase,
    classify,
    classify_all,
    closure_faces,
    complementary_roots,
    connecting_torus_element,
    h_gamma_roots,
    is_idempotent,
    sample_locus_point,
    sample_off_locus_point,
    satisfies_locus,
)
from packages.idempotents.verification import verify_classification, verify_orbit_structure
from packages.monoid.group import GroupElement, to_point
from packages.shared.exceptions import EmptyLocusError, PatternError
from packages.shared.rng import spawn_rngs


def test_tau_orbit_is_a_singleton(cylinder):
    locus = classify(cylinder, cylinder.tau)
    assert locus.case == LocusCase.SINGLETON
    assert locus.witness == cylinder.neutral
    assert is_idempotent(cylinder, cylinder.neutral)


def test_open_orbit_is_empty(cylinder):
    locus = classify(cylinder, cylinder.sigma.zero_face)
    assert locus.is_empty
    assert locus.certificate == {"ray": 0, "condition": "both_roots_perpendicular"}


def test_neither_root_perpendicular(cylinder):
    locus = classify(cylinder, cylinder.sigma.face((3,)))
    assert locus.is_empty
    assert locus.certificate["condition"] == "neither_root_perpendicular"


def test_positive_locus(cylinder):
    gamma = cylinder.sigma.face((2,))
    locus = classify(cylinder, gamma)
    assert locus.case == LocusCase.POSITIVE
    assert locus.equations == ((0, 0, 0, 1),)
    assert locus.certificate == {"hull": [0, 1, 2]}
    assert is_idempotent(cylinder, locus.witness)


def test_units_other_than_neutral_are_not_idempotent(cylinder):
    g = GroupElement(alpha=(Fraction(1), Fraction(0)), torus=(Fraction(1), Fraction(1)))
    assert not is_idempotent(cylinder, to_point(cylinder, g))


def test_roots_for_the_closure(cylinder):
    gamma = cylinder.sigma.face((2,))
    assert [r.vector for r in h_gamma_roots(cylinder, gamma)] == [(-1, 0, 0, 1), (0, -1, 0, 2)]
    assert [r.vector for r in complementary_roots(cylinder, gamma)] == [(-1, 0, 1, 2), (0, -1, 2, 1)]
    with pytest.raises(PatternError):
        h_gamma_roots(cylinder, cylinder.sigma.zero_face)


def test_closure_faces(cylinder):
    faces = closure_faces(cylinder, cylinder.sigma.face((2,)))
    assert [f.ray_indices for f in faces] == [(2,), (0, 2), (1, 2), (0, 1, 2)]
    with pytest.raises(EmptyLocusError):
        closure_faces(cylinder, cylinder.sigma.zero_face)


def test_locus_sampling(cylinder):
    locus = classify(cylinder, cylinder.sigma.face((2,)))
    for rng in spawn_rngs(31, 10):
        x = sample_locus_point(cylinder, locus, rng)
        assert satisfies_locus(locus, x)
        assert is_idempotent(cylinder, x)
        off = sample_off_locus_point(cylinder, locus, rng)
        assert off is not None and not satisfies_locus(locus, off)
        assert not is_idempotent(cylinder, off)


def test_empty_locus_cannot_be_sampled(cylinder):
    locus = classify(cylinder, cylinder.sigma.zero_face)
    with pytest.raises(EmptyLocusError):
        sample_locus_point(cylinder, locus, spawn_rngs(0, 1)[0])


def test_connecting_torus_element(cylinder):
    gamma = cylinder.sigma.face((2,))
    locus = classify(cylinder, gamma)
    rng = spawn_rngs(7, 1)[0]
    x = sample_locus_point(cylinder, locus, rng)
    y = sample_locus_point(cylinder, locus, rng)
    parameters = connecting_torus_element(cylinder, gamma, x, y)
    assert parameters is not None and set(parameters) == {0, 1}
    off = sample_off_locus_point(cylinder, locus, rng)
    assert connecting_torus_element(cylinder, gamma, x, off) is None


def test_every_orbit_is_classified(affine_non_active):
    loci = classify_all(affine_non_active)
    assert len(loci) == len(affine_non_active.sigma.faces)
    singletons = [locus for locus in loci if locus.case == LocusCase.SINGLETON]
    assert all(affine_non_active.tau.is_subface_of(locus.gamma) for locus in singletons)
    assert len(singletons) == 4


def test_orbit_structure(cylinder):
    report = verify_orbit_structure(cylinder, cylinder.sigma.face((2,)), samples=12, seed=3)
    assert report.ok, report.counterexamples[:1]


def test_complementary_roots_miss_the_closure(cylinder):
    gamma = cylinder.sigma.face((2,))
    report = verify_orbit_structure(
        cylinder, gamma, samples=8, seed=3, roots=complementary_roots(cylinder, gamma)
    )
    assert not report.ok
    assert {c.check for c in report.counterexamples} == {"closure_coverage"}


@pytest.mark.parametrize("fixture", ["affine_non_active", "affine_active", "cylinder", "commutative_cylinder"])
def test_verify_classification(fixture, request):
    report = verify_classification(request.getfixturevalue(fixture), samples=3, seed=5)
    assert report.ok, report.counterexamples[:1]
