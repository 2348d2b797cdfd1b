"""Smith normal form, cones, faces and Hilbert bases."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from packages.lattice.cone import Cone, dual_cone, is_regular_face, relative_interior_point
from packages.lattice.semigroup import (
    enumerate_semigroup,
    express_in_generators,
    hilbert_basis,
    lattice_points_up_to_degree,
    perp_semigroup,
    semigroup_basis,
)
from packages.lattice.smith import decompose_in_sublattice, perp_lattice, smith_normal_form, solve_integer
from packages.lattice.vectors import combine, pairing, primitive, vectors_in_box
from packages.presets.examples import QUADRIC_COORDINATES, QUADRIC_RAYS
from packages.shared.exceptions import ConeError, FaceError, SublatticeError
from tests.factories import orthant

small_int = st.integers(min_value=-6, max_value=6)


def _matmul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


@pytest.fixture(scope="module")
def quadric() -> Cone:
    return Cone.from_rays(QUADRIC_RAYS)


@pytest.fixture(scope="module")
def thin() -> Cone:
    """cone((1,0), (1,2)): not smooth."""
    return Cone.from_rays([(1, 0), (1, 2)])


# ============================================================================
# Smith normal form
# ============================================================================


@given(st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_smith_form_diagonalizes(matrix):
    snf = smith_normal_form(matrix)
    product = _matmul(_matmul([list(r) for r in snf.left], matrix), [list(r) for r in snf.right])
    for i, row in enumerate(product):
        for j, value in enumerate(row):
            expected = snf.invariant_factors[i] if i == j and i < snf.rank else 0
            assert value == expected
    for a, b in zip(snf.invariant_factors, snf.invariant_factors[1:]):
        assert a > 0 and b % a == 0


@given(st.lists(st.lists(small_int, min_size=3, max_size=3), min_size=1, max_size=3))
@settings(max_examples=60, deadline=None)
def test_smith_inverses(matrix):
    snf = smith_normal_form(matrix)
    identity_left = _matmul([list(r) for r in snf.left], [list(r) for r in snf.left_inverse])
    identity_right = _matmul([list(r) for r in snf.right], [list(r) for r in snf.right_inverse])
    assert identity_left == [[int(i == j) for j in range(snf.rows)] for i in range(snf.rows)]
    assert identity_right == [[int(i == j) for j in range(snf.cols)] for i in range(snf.cols)]


def test_invariant_factors_of_small_matrix():
    assert smith_normal_form([[2, 4], [6, 8]]).invariant_factors == (2, 4)


def test_solve_integer():
    assert solve_integer([[2, 0], [0, 3]], [4, 9], 2) == (2, 3)
    assert solve_integer([[2, 0], [0, 3]], [1, 0], 2) is None


def test_decompose_in_sublattice():
    assert decompose_in_sublattice((2, 2), [(1, 1)]) == (2,)
    with pytest.raises(SublatticeError):
        decompose_in_sublattice((1, 0), [(1, 1)])


@given(st.lists(st.tuples(small_int, small_int, small_int), min_size=1, max_size=2))
@settings(max_examples=60, deadline=None)
def test_perp_lattice_basis(vectors):
    lattice = perp_lattice(tuple(vectors), 3)
    for j, b in enumerate(lattice.basis):
        assert all(pairing(v, b) == 0 for v in vectors)
        assert lattice.coordinates(b) == tuple(int(i == j) for i in range(len(lattice.basis)))


@given(st.tuples(small_int, small_int, small_int), st.tuples(small_int, small_int))
@settings(max_examples=60, deadline=None)
def test_perp_lattice_coordinates_recover_vector(v, coefficients):
    lattice = perp_lattice(((v[0], v[1], v[2]), (0, 0, 1)), 3)
    if len(lattice.basis) == 0:
        return
    u = combine(coefficients[: len(lattice.basis)], lattice.basis, 3)
    assert combine(lattice.coordinates(u), lattice.basis, 3) == u


# ============================================================================
# Cones and faces
# ============================================================================


def test_orthant_faces_and_dual():
    cone = orthant(3)
    assert len(cone.faces) == 8
    assert set(cone.dual.rays) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert cone.zero_face.dim == 0
    assert cone.full_face.dim == 3


@pytest.mark.parametrize(
    "rays",
    [
        [(1, 0, 0), (0, 1, 0)],
        [(1, 0), (-1, 0), (0, 1)],
        [(2, 0), (0, 1)],
        [(1, 0), (1, 0)],
        [(1, 0), (0, 1), (1, 1)],
    ],
)
def test_invalid_cones_rejected(rays):
    with pytest.raises(ConeError):
        Cone.from_rays(rays)


def test_from_generators_drops_redundant():
    cone = Cone.from_generators([(1, 0), (0, 1), (1, 1), (2, 0)])
    assert set(cone.rays) == {(1, 0), (0, 1)}


def test_quadric_faces(quadric):
    assert len(quadric.faces) == 20
    assert set(quadric.dual.rays) == set(QUADRIC_COORDINATES)
    with pytest.raises(FaceError):
        quadric.face((0, 3))
    assert quadric.face_hull((0, 3)).ray_indices == (0, 1, 3, 4)


def test_face_order_is_by_dimension(quadric):
    dims = [face.dim for face in quadric.faces]
    assert dims == sorted(dims)


def test_regular_faces(thin):
    assert not is_regular_face(thin, thin.full_face)
    assert is_regular_face(thin, thin.face((0,)))
    assert is_regular_face(thin, thin.face((1,)))
    assert is_regular_face(thin, thin.zero_face)


def _det(rows):
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        (-1) ** j * rows[0][j] * _det([row[:j] + row[j + 1 :] for row in rows[1:]])
        for j in range(len(rows))
        if rows[0][j]
    )


def _completes_to_basis(rays, n):
    """Search the unit box for vectors that extend ``rays`` to a basis of Z^n."""
    if len(rays) > n:
        return False
    box = sorted((v for v in vectors_in_box(n, 1) if any(v)), key=lambda v: sum(map(abs, v)))
    for extra in itertools.combinations(box, n - len(rays)):
        if abs(_det([list(v) for v in (*rays, *extra)])) == 1:
            return True
    return False


@pytest.mark.parametrize(
    "rays",
    [
        [(1, 0), (1, 2)],
        [(1, 0), (1, 3)],
        [(1, 0, 0), (0, 1, 0), (1, 1, 2)],
        [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)],
        QUADRIC_RAYS,
    ],
)
def test_regular_faces_match_basis_completion(rays):
    cone = Cone.from_rays(rays)
    for face in cone.faces:
        assert is_regular_face(cone, face) == _completes_to_basis(face.rays, cone.ambient_rank), face


def test_relative_interior_point(quadric):
    tau = quadric.face((0, 1))
    v = relative_interior_point(quadric, tau)
    assert v == (0, 0, 1, 1)
    for index, ray in enumerate(quadric.rays):
        assert (pairing(ray, v) == 0) == tau.contains_ray(index)


# ============================================================================
# Semigroups
# ============================================================================


def test_quadric_hilbert_basis(quadric):
    basis = semigroup_basis(quadric)
    assert basis.certified
    assert basis.generators == ((0, 0, 1, 0), (0, 0, 0, 1), (0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 0, -1))
    assert basis.max_degree == 2


def test_hilbert_basis_of_non_smooth_cone(thin):
    basis = semigroup_basis(thin)
    assert basis.generators == ((0, 1), (1, 0), (2, -1))


def test_dual_cone_of_non_smooth_cone(thin):
    dual = dual_cone(thin)
    assert set(dual.rays) == {(0, 1), (2, -1)}
    assert set(dual_cone(dual).rays) == set(thin.rays)


def test_hilbert_basis_fallback_matches_certified(thin, caplog):
    certified = hilbert_basis(thin.dual)
    fallback = hilbert_basis(thin.dual, box_bound=6, max_candidates=0)
    assert certified.certified and not fallback.certified
    assert fallback.generators == certified.generators
    assert "falling back" in caplog.text


@pytest.mark.parametrize("rays", [QUADRIC_RAYS, [(1, 0), (1, 2)], [(1, 0), (1, 3)], [(1, 0, 0), (0, 1, 0), (1, 1, 2)]])
def test_generators_span_bounded_points(rays):
    cone = Cone.from_rays(rays)
    basis = semigroup_basis(cone)
    points = lattice_points_up_to_degree(cone.dual, 6)
    assert set(enumerate_semigroup(basis.generators, basis.grading, 6)) == set(points)
    for u in points:
        coefficients = express_in_generators(u, basis, cone.dual)
        assert combine(coefficients, basis.generators, cone.ambient_rank) == u


def test_generators_are_irreducible(quadric):
    basis = semigroup_basis(quadric)
    for g in basis.generators:
        assert primitive(g) == g
        for h in basis.generators:
            if h != g:
                rest = tuple(a - b for a, b in zip(g, h))
                assert not quadric.dual.contains(rest)


def test_perp_semigroup(quadric):
    tau = quadric.face((0, 1))
    assert perp_semigroup(quadric, tau) == ((0, 0, 1, 0), (0, 0, 0, 1))
