"""Torus actions, root subgroups and the orbits they join."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from packages.actions.orbit_pairs import he_connected_pairs, verify_orbit_pairs
from packages.actions.root_subgroup import (
    conjugated_parameter,
    degenerate_parameter,
    observe_orbit_jump,
    root_subgroup_action,
    root_subgroup_value,
)
from packages.actions.torus import ambient_torus_action, is_fixed_by_ray, ray_subtorus_action
from packages.demazure.roots import make_root
from packages.monoid.point import evaluate, make_point
from packages.presets.examples import QUADRIC_COORDINATES
from packages.shared.exceptions import ChartError, DimensionMismatchError, IncompatibleRootsError
from packages.shared.rng import make_rng, random_nonzero_rational
from tests.factories import affine_point, orthant, points

CYLINDER_ROOTS = [(-1, 0, 0, 1), (-1, 0, 1, 2), (0, -1, 0, 2), (0, -1, 2, 1), (0, 0, -1, 0)]

nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(lambda q: q != 0)


def _torus_power(t, u):
    result = Fraction(1)
    for value, exponent in zip(t, u):
        result *= value**exponent
    return result


# ============================================================================
# Torus
# ============================================================================


def test_ambient_torus_scales_characters(cylinder):
    t = (Fraction(2), Fraction(-1, 3), Fraction(5), Fraction(3, 2))
    for x in points(cylinder, 15, seed=9):
        moved = ambient_torus_action(t, x)
        assert moved.face == x.face
        for u in QUADRIC_COORDINATES:
            assert evaluate(moved, u) == _torus_power(t, u) * evaluate(x, u)


def test_ambient_torus_identity_and_composition(cylinder):
    one = (Fraction(1),) * 4
    s = (Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 2))
    t = (Fraction(-5), Fraction(1, 7), Fraction(4), Fraction(3))
    for x in points(cylinder, 10, seed=2):
        assert ambient_torus_action(one, x) == x
        product = tuple(a * b for a, b in zip(s, t))
        assert ambient_torus_action(s, ambient_torus_action(t, x)) == ambient_torus_action(product, x)


def test_ray_subtorus_fixes_orbits_through_the_ray(cylinder):
    for x in points(cylinder, 30, seed=4):
        for index, p in enumerate(cylinder.sigma.rays):
            if x.face.contains_ray(index):
                assert is_fixed_by_ray(p, x)
                assert ray_subtorus_action(p, Fraction(7, 2), x) == x


def test_ray_subtorus_rejects_bad_input(cylinder):
    x = cylinder.neutral
    with pytest.raises(DimensionMismatchError):
        ray_subtorus_action((2, 0, 0, 0), Fraction(2), x)
    with pytest.raises(DimensionMismatchError):
        ray_subtorus_action((1, 0, 0), Fraction(2), x)


# ============================================================================
# Root subgroups
# ============================================================================


def test_zero_parameter_is_identity(cylinder):
    e = make_root(cylinder.sigma, CYLINDER_ROOTS[0])
    for x in points(cylinder, 10, seed=6):
        assert root_subgroup_action(e, Fraction(0), x) == x


@pytest.mark.parametrize("vector", CYLINDER_ROOTS)
@given(a=nonzero, b=nonzero, seed=st.integers(min_value=0, max_value=10**6))
@settings(max_examples=15, deadline=None)
def test_root_subgroup_is_additive(cylinder, vector, a, b, seed):
    e = make_root(cylinder.sigma, vector)
    x = points(cylinder, 1, seed=seed)[0]
    twice = root_subgroup_action(e, b, root_subgroup_action(e, a, x))
    assert twice == root_subgroup_action(e, a + b, x)


def test_value_on_the_plane():
    cone = orthant(2)
    e = make_root(cone, (-1, 2))
    x = make_point(cone.zero_face, [Fraction(1), Fraction(1)])
    x = ambient_torus_action((Fraction(3), Fraction(2)), x)
    # x1 -> x1 + a x2^2
    assert root_subgroup_value(e, Fraction(5), x, (1, 0)) == 3 + 5 * 4
    assert root_subgroup_value(e, Fraction(5), x, (0, 1)) == 2


def test_conjugation_by_ray_subtorus(cylinder):
    rng = make_rng(17)
    for vector in CYLINDER_ROOTS:
        e = make_root(cylinder.sigma, vector)
        for p in cylinder.sigma.rays:
            t = random_nonzero_rational(rng)
            a = random_nonzero_rational(rng)
            for x in points(cylinder, 5, seed=int(rng.integers(0, 1000))):
                conjugated = ray_subtorus_action(p, 1 / t, root_subgroup_action(e, a, ray_subtorus_action(p, t, x)))
                assert conjugated == root_subgroup_action(e, conjugated_parameter(e, p, t, a), x)


def test_degenerate_parameter_drops_to_boundary():
    cone = orthant(2)
    base = make_point(cone.zero_face, [Fraction(1), Fraction(1)])
    x = ambient_torus_action((Fraction(2), Fraction(3)), base)
    e = make_root(cone, (-1, 0))
    assert degenerate_parameter(e, x) == -2
    assert observe_orbit_jump(e, x) == cone.face((0,))


def test_degenerate_parameter_needs_chart(affine_active):
    e = make_root(affine_active.sigma, (-1, 0, 0, 0))
    x = affine_point(affine_active, [0, 1, 2, 3])
    with pytest.raises(ChartError):
        degenerate_parameter(e, x)
    assert observe_orbit_jump(e, x) is None


def test_wrong_ray_index_rejected(cylinder):
    e = make_root(cylinder.sigma, CYLINDER_ROOTS[0])
    bad = type(e)(vector=e.vector, ray_index=1)
    with pytest.raises(IncompatibleRootsError):
        root_subgroup_action(bad, Fraction(1), cylinder.neutral)


# ============================================================================
# Orbit pairs
# ============================================================================


def test_pairs_on_the_plane():
    cone = orthant(2)
    pairs = he_connected_pairs(cone, make_root(cone, (-1, 0)))
    assert {(p.gamma1.ray_indices, p.gamma2.ray_indices) for p in pairs} == {((), (0,)), ((1,), (0, 1))}
    pairs = he_connected_pairs(cone, make_root(cone, (-1, 1)))
    assert [(p.gamma1.ray_indices, p.gamma2.ray_indices) for p in pairs] == [((), (0,))]


def test_pair_targets_contain_the_ray(cylinder):
    for vector in CYLINDER_ROOTS:
        e = make_root(cylinder.sigma, vector)
        for pair in he_connected_pairs(cylinder.sigma, e):
            assert not pair.gamma1.contains_ray(e.ray_index)
            assert pair.gamma2.contains_ray(e.ray_index)
            assert set(pair.gamma2.ray_indices) == set(pair.gamma1.ray_indices) | {e.ray_index}


@pytest.mark.parametrize("vector", CYLINDER_ROOTS)
def test_verify_orbit_pairs(cylinder, vector):
    report = verify_orbit_pairs(cylinder.sigma, make_root(cylinder.sigma, vector), samples=4, seed=13)
    assert report.ok, report.counterexamples[:1]
