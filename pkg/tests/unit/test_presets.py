import pytest

from packages.monoid.root_monoid import is_active
from packages.presets.examples import (
    AFFINE_ACTIVE,
    QUADRIC_DEFAULT,
    PresetSpec,
    affine_space_monoid,
    build_preset,
    default_presets,
    quadric_cylinder_monoid,
)
from packages.shared.exceptions import PresetError, RootMonoidError


def test_default_presets_build():
    built = [build_preset(spec) for spec in default_presets()]
    assert [X.k for X in built] == [2, 2, 2, 2, 2]
    assert [is_active(X) for X in built] == [False, True, True, False, False]


def test_affine_roots(affine_active):
    assert affine_active.e1 == ((-1, 0, 0, 0), (0, -1, 1, 0))
    assert affine_active.e2 == ((-1, 0, 1, 1), (0, -1, 3, 4))
    assert affine_active.tau.ray_indices == (0, 1)


def test_cylinder_roots(cylinder):
    assert cylinder.e1 == ((-1, 0, 0, 1), (0, -1, 0, 2))
    assert cylinder.e2 == ((-1, 0, 1, 2), (0, -1, 2, 1))
    assert cylinder.interior == (0, 0, 1, 1)


def test_as_dict(cylinder):
    data = cylinder.as_dict()
    assert data["tau"] == [0, 1]
    assert data["pairs"][0] == {"e1": [-1, 0, 0, 1], "e2": [-1, 0, 1, 2]}
    assert len(data["cone"]["rays"]) == 5


@pytest.mark.parametrize(
    "params",
    [
        dict(AFFINE_ACTIVE, k=5),
        dict(AFFINE_ACTIVE, a=[[0, 0]]),
        dict(AFFINE_ACTIVE, a=[[0, -1], [1, 0]]),
        dict(AFFINE_ACTIVE, b=[[1, 1, 1], [3, 4]]),
    ],
)
def test_affine_parameters_validated(params):
    with pytest.raises(PresetError):
        affine_space_monoid(**params)


@pytest.mark.parametrize("name,value", [("a1", -1), ("b1", 0), ("d2", 0)])
def test_cylinder_parameters_validated(name, value):
    with pytest.raises(PresetError):
        quadric_cylinder_monoid(**dict(QUADRIC_DEFAULT, **{name: value}))


def test_unknown_preset():
    with pytest.raises(PresetError):
        build_preset(PresetSpec("torus", {}))


def test_affine_with_no_roots():
    X = affine_space_monoid(2, 0, [], [])
    assert X.k == 0
    assert is_active(X)


def test_cylinder_with_large_exponents_is_compatible():
    X = quadric_cylinder_monoid(a1=3, b1=4, a2=0, b2=1, c1=1, d1=1, c2=5, d2=2)
    assert X.k == 2


def test_preset_error_code():
    with pytest.raises(RootMonoidError) as info:
        build_preset(PresetSpec("cylinder", {"a1": 0}))
    assert info.value.code == "invalid_preset"
