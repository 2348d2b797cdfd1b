"""Integer lattice vectors and the natural pairing."""

from itertools import product
from math import gcd
from typing import Iterable, Iterator, Sequence, Tuple

from packages.shared.exceptions import DimensionMismatchError

LatticeVector = Tuple[int, ...]


def vector(coords: Iterable[int]) -> LatticeVector:
    """Normalize any integer sequence to a LatticeVector."""
    return tuple(int(c) for c in coords)


def _check_lengths(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(
            f"Vectors of rank {len(u)} and {len(v)} cannot be combined",
            {"left": list(u), "right": list(v)},
        )


def pairing(p: Sequence[int], u: Sequence[int]) -> int:
    """Natural pairing between N and M."""
    _check_lengths(p, u)
    return sum(a * b for a, b in zip(p, u))


def add(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    _check_lengths(u, v)
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    _check_lengths(u, v)
    return tuple(a - b for a, b in zip(u, v))


def scale(c: int, u: Sequence[int]) -> LatticeVector:
    return tuple(c * a for a in u)


def neg(u: Sequence[int]) -> LatticeVector:
    return tuple(-a for a in u)


def zero(n: int) -> LatticeVector:
    return (0,) * n


def is_zero(u: Sequence[int]) -> bool:
    return all(a == 0 for a in u)


def combine(coefficients: Sequence[int], vectors: Sequence[Sequence[int]], n: int) -> LatticeVector:
    """Integer linear combination of vectors of rank n."""
    total = [0] * n
    for c, v in zip(coefficients, vectors):
        if c:
            for i, a in enumerate(v):
                total[i] += c * a
    return tuple(total)


def content(u: Sequence[int]) -> int:
    """gcd of the coordinates (0 for the zero vector)."""
    g = 0
    for a in u:
        g = gcd(g, a)
    return g


def is_primitive(u: Sequence[int]) -> bool:
    return content(u) == 1


def primitive(u: Sequence[int]) -> LatticeVector:
    """Divide by the gcd, keeping the direction (used for cone rays)."""
    g = content(u)
    if g == 0:
        return tuple(u)
    return tuple(a // g for a in u)


def primitive_free(u: Sequence[int]) -> LatticeVector:
    """Primitive representative with first nonzero coordinate positive."""
    p = primitive(u)
    for a in p:
        if a != 0:
            return p if a > 0 else neg(p)
    return p


def max_norm(u: Sequence[int]) -> int:
    return max((abs(a) for a in u), default=0)


def vectors_of_max_norm(n: int, radius: int) -> Iterator[LatticeVector]:
    """All vectors with max-norm exactly ``radius``, in lexicographic order."""
    if radius == 0:
        yield zero(n)
        return
    for coords in product(range(-radius, radius + 1), repeat=n):
        if max_norm(coords) == radius:
            yield coords


def vectors_in_box(n: int, radius: int) -> Iterator[LatticeVector]:
    """All vectors with max-norm at most ``radius``, in lexicographic order."""
    yield from product(range(-radius, radius + 1), repeat=n)
