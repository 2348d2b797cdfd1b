import numpy as np
import pytest

from packages.monoid.root_monoid import RootMonoid
from packages.presets.examples import (
    AFFINE_ACTIVE,
    AFFINE_NON_ACTIVE,
    QUADRIC_DEFAULT,
    QUADRIC_PARALLEL,
    affine_space_monoid,
    quadric_cylinder_monoid,
)
from packages.shared.rng import make_rng
from tests import factories


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(1234)


@pytest.fixture(scope="session")
def affine_non_active() -> RootMonoid:
    return affine_space_monoid(**AFFINE_NON_ACTIVE)


@pytest.fixture(scope="session")
def affine_active() -> RootMonoid:
    return affine_space_monoid(**AFFINE_ACTIVE)


@pytest.fixture(scope="session")
def cylinder() -> RootMonoid:
    return quadric_cylinder_monoid(**QUADRIC_DEFAULT)


@pytest.fixture(scope="session")
def additive_line() -> RootMonoid:
    return factories.additive_line()


@pytest.fixture(scope="session")
def commutative_cylinder() -> RootMonoid:
    return factories.commutative_cylinder()


@pytest.fixture(scope="session")
def quadric_non_active() -> RootMonoid:
    return quadric_cylinder_monoid(**QUADRIC_PARALLEL)
