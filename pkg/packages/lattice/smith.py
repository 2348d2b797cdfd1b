"""Smith normal form over the integers and the lattice solves built on it."""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from packages.lattice.vectors import LatticeVector
from packages.shared.exceptions import DimensionMismatchError, SublatticeError

Matrix = List[List[int]]


def _identity(size: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(size)] for i in range(size)]


@dataclass(frozen=True)
class SmithForm:
    """
    Decomposition ``left * A * right = diagonal`` with unimodular transforms.

    ``left_inverse`` and ``right_inverse`` are tracked alongside so callers never
    invert an integer matrix themselves. Invariant factors satisfy d_1 | d_2 | ...
    """

    rows: int
    cols: int
    left: Tuple[Tuple[int, ...], ...]
    right: Tuple[Tuple[int, ...], ...]
    left_inverse: Tuple[Tuple[int, ...], ...]
    right_inverse: Tuple[Tuple[int, ...], ...]
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


class _Reducer:
    """Mutable working state for one Smith normal form computation."""

    def __init__(self, matrix: Sequence[Sequence[int]], cols: int):
        self.m = len(matrix)
        self.n = cols
        self.d: Matrix = [list(row) for row in matrix]
        self.u = _identity(self.m)
        self.u_inv = _identity(self.m)
        self.v = _identity(self.n)
        self.v_inv = _identity(self.n)

    # Row operations act on d and u; u_inv receives the inverse column operation.

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.d[i], self.d[j] = self.d[j], self.d[i]
        self.u[i], self.u[j] = self.u[j], self.u[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]"""
        if factor == 0:
            return
        for mat in (self.d, self.u):
            src = mat[source]
            tgt = mat[target]
            for k in range(len(tgt)):
                tgt[k] += factor * src[k]
        for row in self.u_inv:
            row[source] -= factor * row[target]

    def negate_row(self, i: int) -> None:
        self.d[i] = [-a for a in self.d[i]]
        self.u[i] = [-a for a in self.u[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    # Column operations act on d and v; v_inv receives the inverse row operation.

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.d, self.v):
            for row in mat:
                row[i], row[j] = row[j], row[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col[target] += factor * col[source]"""
        if factor == 0:
            return
        for mat in (self.d, self.v):
            for row in mat:
                row[target] += factor * row[source]
        src = self.v_inv[target]
        tgt = self.v_inv[source]
        for k in range(len(tgt)):
            tgt[k] -= factor * src[k]

    def _pivot(self, t: int) -> Optional[Tuple[int, int]]:
        best: Optional[Tuple[int, int]] = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                a = self.d[i][j]
                if a != 0 and (best is None or abs(a) < abs(self.d[best[0]][best[1]])):
                    best = (i, j)
        return best

    def run(self) -> SmithForm:
        factors: List[int] = []
        t = 0
        while t < min(self.m, self.n):
            pivot = self._pivot(t)
            if pivot is None:
                break
            while True:
                i, j = pivot
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                p = self.d[t][t]
                for i in range(t + 1, self.m):
                    self.add_row(i, t, -(self.d[i][t] // p))
                for j in range(t + 1, self.n):
                    self.add_col(j, t, -(self.d[t][j] // p))
                dirty = any(self.d[i][t] for i in range(t + 1, self.m)) or any(
                    self.d[t][j] for j in range(t + 1, self.n)
                )
                if not dirty:
                    bad_row = next(
                        (
                            i
                            for i in range(t + 1, self.m)
                            for j in range(t + 1, self.n)
                            if self.d[i][j] % p
                        ),
                        None,
                    )
                    if bad_row is None:
                        break
                    self.add_row(t, bad_row, 1)
                pivot = self._pivot(t)
                assert pivot is not None
            if self.d[t][t] < 0:
                self.negate_row(t)
            factors.append(self.d[t][t])
            t += 1

        def freeze(mat: Matrix) -> Tuple[Tuple[int, ...], ...]:
            return tuple(tuple(row) for row in mat)

        return SmithForm(
            rows=self.m,
            cols=self.n,
            left=freeze(self.u),
            right=freeze(self.v),
            left_inverse=freeze(self.u_inv),
            right_inverse=freeze(self.v_inv),
            invariant_factors=tuple(factors),
        )


def smith_normal_form(matrix: Sequence[Sequence[int]], cols: Optional[int] = None) -> SmithForm:
    """
    Compute the Smith normal form of an integer matrix.

    Args:
        matrix: Rows of the matrix (may be empty)
        cols: Column count, required when ``matrix`` has no rows

    Returns:
        SmithForm with unimodular transforms and their inverses
    """
    if cols is None:
        if not matrix:
            raise DimensionMismatchError("Column count required for an empty matrix")
        cols = len(matrix[0])
    for row in matrix:
        if len(row) != cols:
            raise DimensionMismatchError(f"Row {list(row)} does not have {cols} columns")
    return _Reducer(matrix, cols).run()


def _mat_vec(mat: Sequence[Sequence[int]], vec: Sequence[int]) -> List[int]:
    return [sum(a * b for a, b in zip(row, vec)) for row in mat]


def solve_integer(matrix: Sequence[Sequence[int]], rhs: Sequence[int], cols: int) -> Optional[LatticeVector]:
    """
    One integer solution of ``matrix * x = rhs``, or None if there is none.

    Free coordinates are set to zero, so the answer is deterministic.
    """
    if len(rhs) != len(matrix):
        raise DimensionMismatchError("Right-hand side length differs from row count")
    snf = smith_normal_form(matrix, cols)
    transformed = _mat_vec(snf.left, rhs)
    y = [0] * cols
    for i, d in enumerate(snf.invariant_factors):
        if transformed[i] % d:
            return None
        y[i] = transformed[i] // d
    if any(transformed[i] for i in range(snf.rank, len(transformed))):
        return None
    return tuple(_mat_vec(snf.right, y))


def decompose_in_sublattice(u: Sequence[int], basis: Sequence[Sequence[int]]) -> LatticeVector:
    """
    Integer coefficients expressing ``u`` in ``basis``.

    Raises:
        SublatticeError: u is not in the integer span of the basis
    """
    if not basis:
        if any(u):
            raise SublatticeError(f"{list(u)} is not in the zero lattice")
        return ()
    n = len(u)
    columns = [[b[i] for b in basis] for i in range(n)]
    solution = solve_integer(columns, u, len(basis))
    if solution is None:
        raise SublatticeError(
            f"{list(u)} is not in the lattice spanned by the basis",
            {"vector": list(u), "basis": [list(b) for b in basis]},
        )
    return solution


def invariant_factors(vectors: Sequence[Sequence[int]], n: int) -> Tuple[int, ...]:
    return smith_normal_form(vectors, n).invariant_factors


def integer_rank(vectors: Sequence[Sequence[int]], n: int) -> int:
    if not vectors:
        return 0
    return smith_normal_form(vectors, n).rank


@dataclass(frozen=True)
class PerpLattice:
    """
    Lattice basis of ``M ∩ V⊥`` for a set of vectors ``V`` in N.

    ``coordinate_rows`` is an integer left inverse of the basis: for u in the
    lattice, the coefficients of u are ``coordinate_rows * u``.
    """

    rank: int
    basis: Tuple[LatticeVector, ...]
    coordinate_rows: Tuple[Tuple[int, ...], ...]

    def coordinates(self, u: Sequence[int]) -> Tuple[int, ...]:
        return tuple(_mat_vec(self.coordinate_rows, u))


@lru_cache(maxsize=4096)
def perp_lattice(vectors: Tuple[LatticeVector, ...], rank: int) -> PerpLattice:
    """Saturated sublattice orthogonal to ``vectors``, with a canonical basis."""
    snf = smith_normal_form([list(v) for v in vectors], rank)
    r = snf.rank
    basis = tuple(tuple(snf.right[i][j] for i in range(rank)) for j in range(r, rank))
    rows = tuple(snf.right_inverse[j] for j in range(r, rank))
    return PerpLattice(rank=rank, basis=basis, coordinate_rows=rows)


def saturated_complement(
    generators: Sequence[Sequence[int]], dimension: int
) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
    """
    Split Z^dimension along the saturation of the span of ``generators``.

    Returns ``(rank, coefficient_rows)`` where the columns of the unimodular
    matrix F = left_inverse form a basis whose first ``rank`` members span the
    saturation, and ``coefficient_rows`` (= left) expresses the standard basis
    in F: e_l = sum_i coefficient_rows[i][l] * f_i.
    """
    if not generators:
        return 0, tuple(tuple(row) for row in _identity(dimension))
    columns = [[g[i] for g in generators] for i in range(dimension)]
    snf = smith_normal_form(columns, len(generators))
    return snf.rank, snf.left
