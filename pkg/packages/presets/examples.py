"""Worked examples: root monoids on affine space and on a quadric cylinder."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Sequence, Tuple

from packages.demazure.roots import root_pair_set
from packages.lattice.cone import Cone
from packages.lattice.vectors import LatticeVector
from packages.monoid.root_monoid import RootMonoid, build
from packages.shared.exceptions import PresetError

logger = logging.getLogger(__name__)

QUADRIC_RAYS: Tuple[LatticeVector, ...] = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 1, 0, 1),
    (1, 0, 0, 1),
)

# x_i = chi^{q_i}; the cylinder is {x1 x2 = x4 x5}
QUADRIC_COORDINATES: Tuple[LatticeVector, ...] = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (1, 1, 0, -1),
)

QUADRIC_PARAMETERS = ("a1", "b1", "a2", "b2", "c1", "d1", "c2", "d2")

# Two instances on A^4 with tau spanned by the first two rays.
AFFINE_NON_ACTIVE = {"n": 4, "k": 2, "a": [[0, 0], [1, 0]], "b": [[1, 2], [3, 4]]}
AFFINE_ACTIVE = {"n": 4, "k": 2, "a": [[0, 0], [1, 0]], "b": [[1, 1], [3, 4]]}
QUADRIC_DEFAULT = {"a1": 0, "b1": 1, "a2": 1, "b2": 2, "c1": 0, "d1": 2, "c2": 2, "d2": 1}
# (a1, b1) = (a2, b2): the first pair commutes
QUADRIC_DEGENERATE = {"a1": 1, "b1": 1, "a2": 1, "b2": 1, "c1": 0, "d1": 1, "c2": 1, "d2": 3}
# second difference twice the first: not active
QUADRIC_PARALLEL = {"a1": 0, "b1": 1, "a2": 1, "b2": 2, "c1": 0, "d1": 1, "c2": 2, "d2": 3}
QUADRIC_PRESETS = (QUADRIC_DEFAULT, QUADRIC_DEGENERATE, QUADRIC_PARALLEL)


@dataclass(frozen=True)
class PresetSpec:
    name: str
    parameters: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "parameters": self.parameters}


# ============================================================================
# Affine space
# ============================================================================


def _check_affine(n: int, k: int, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> None:
    if not 0 <= k <= n or n < 1:
        raise PresetError(f"Need 0 <= k <= n and n >= 1, got n={n}, k={k}")
    if len(a) != k or len(b) != k:
        raise PresetError(f"Expected {k} exponent vectors for each side, got {len(a)} and {len(b)}")
    for vectors in (a, b):
        for v in vectors:
            if len(v) != n - k:
                raise PresetError(f"Exponent vector {list(v)} must have length {n - k}")
            if any(c < 0 for c in v):
                raise PresetError(f"Exponent vector {list(v)} has a negative entry")


def affine_space_monoid(
    n: int, k: int, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]
) -> RootMonoid:
    """
    Root monoid on A^n with x*y = (x_r y^{a_r} + y_r x^{b_r} for r <= k, x_i y_i for i > k).

    The cone is the positive orthant and tau is spanned by its first k rays.
    """
    _check_affine(n, k, a, b)
    rays = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    cone = Cone.from_rays(rays)
    tau = cone.face(range(k))
    vectors = []
    for r in range(k):
        head = tuple(-1 if i == r else 0 for i in range(k))
        vectors.append((head + tuple(a[r]), head + tuple(b[r])))
    logger.debug(f"Affine space preset n={n} k={k}")
    return build(cone, tau, root_pair_set(tau, vectors))


def affine_space_product(
    k: int,
    a: Sequence[Sequence[int]],
    b: Sequence[Sequence[int]],
    x: Sequence[Fraction],
    y: Sequence[Fraction],
) -> Tuple[Fraction, ...]:
    """The affine-space product written out coordinatewise."""

    def power(z: Sequence[Fraction], exponents: Sequence[int]) -> Fraction:
        result = Fraction(1)
        for value, e in zip(z[k:], exponents):
            result *= Fraction(value) ** e
        return result

    head = [Fraction(x[r]) * power(y, a[r]) + Fraction(y[r]) * power(x, b[r]) for r in range(k)]
    tail = [Fraction(x[i]) * Fraction(y[i]) for i in range(k, len(x))]
    return tuple(head + tail)


# ============================================================================
# Quadric cylinder
# ============================================================================


def _check_quadric(params: Dict[str, int]) -> None:
    missing = [name for name in QUADRIC_PARAMETERS if name not in params]
    if missing:
        raise PresetError(f"Missing parameters: {', '.join(missing)}")
    for name in ("a1", "a2", "c1", "c2"):
        if params[name] < 0:
            raise PresetError(f"{name} must be nonnegative, got {params[name]}")
    for name in ("b1", "b2", "d1", "d2"):
        if params[name] < 1:
            raise PresetError(f"{name} must be positive, got {params[name]}")


def quadric_cylinder_monoid(
    a1: int, b1: int, a2: int, b2: int, c1: int, d1: int, c2: int, d2: int
) -> RootMonoid:
    """Root monoid on {x1 x2 = x4 x5} x A^1 with tau spanned by the first two rays."""
    _check_quadric(dict(a1=a1, b1=b1, a2=a2, b2=b2, c1=c1, d1=d1, c2=c2, d2=d2))
    cone = Cone.from_rays(QUADRIC_RAYS)
    tau = cone.face((0, 1))
    vectors = [
        ((-1, 0, a1, b1), (-1, 0, a2, b2)),
        ((0, -1, c1, d1), (0, -1, c2, d2)),
    ]
    return build(cone, tau, root_pair_set(tau, vectors))


def quadric_cylinder_product(
    params: Dict[str, int], x: Sequence[Fraction], y: Sequence[Fraction]
) -> Tuple[Fraction, ...]:
    """The cylinder product in the coordinates x_i = chi^{q_i}."""
    a1, b1, a2, b2, c1, d1, c2, d2 = (params[name] for name in QUADRIC_PARAMETERS)
    x1, x2, x3, x4, x5 = (Fraction(v) for v in x)
    y1, y2, y3, y4, y5 = (Fraction(v) for v in y)
    z1 = x1 * y3**a1 * y4**b1 + y1 * x3**a2 * x4**b2
    z2 = x2 * y3**c1 * y4**d1 + y2 * x3**c2 * x4**d2
    z5 = (
        x5 * y3 ** (a1 + c1) * y4 ** (b1 + d1 - 1)
        + y5 * x3 ** (a2 + c2) * x4 ** (b2 + d2 - 1)
        + x2 * x3**a2 * x4 ** (b2 - 1) * y1 * y3**c1 * y4 ** (d1 - 1)
        + x1 * x3**c2 * x4 ** (d2 - 1) * y2 * y3**a1 * y4 ** (b1 - 1)
    )
    return (z1, z2, x3 * y3, x4 * y4, z5)


# ============================================================================
# Registry
# ============================================================================


def build_preset(spec: PresetSpec) -> RootMonoid:
    if spec.name == "affine":
        p = spec.parameters
        missing = [name for name in ("n", "k", "a", "b") if name not in p]
        if missing:
            raise PresetError(f"Missing parameters: {', '.join(missing)}")
        return affine_space_monoid(int(p["n"]), int(p["k"]), p["a"], p["b"])
    if spec.name == "cylinder":
        params = {name: int(value) for name, value in spec.parameters.items()}
        _check_quadric(params)
        return quadric_cylinder_monoid(**{name: params[name] for name in QUADRIC_PARAMETERS})
    raise PresetError(f"Unknown preset: {spec.name}")


def default_presets() -> List[PresetSpec]:
    """The instances exercised by the acceptance run."""
    return [
        PresetSpec("affine", dict(AFFINE_NON_ACTIVE)),
        PresetSpec("affine", dict(AFFINE_ACTIVE)),
        *(PresetSpec("cylinder", dict(params)) for params in QUADRIC_PRESETS),
    ]
