"""File and report schemas."""

from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, field_validator, model_validator

# Integers beyond 64 bits travel as decimal strings.
IntLike = Union[int, str]
RationalLike = Union[int, str]


def _to_int(value: IntLike) -> int:
    if isinstance(value, bool):
        raise ValueError("booleans are not integers")
    if isinstance(value, int):
        return value
    return int(str(value).strip())


def _to_vector(values: List[IntLike]) -> List[int]:
    return [_to_int(v) for v in values]


def _to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    return Fraction(value) if isinstance(value, int) else Fraction(str(value).strip())


# ============================================================================
# Inputs
# ============================================================================


class ConeFile(BaseModel):
    """Cone given by its primitive rays."""

    rank: Optional[int] = None
    rays: List[List[int]] = Field(..., min_length=1)

    @field_validator("rays", mode="before")
    @classmethod
    def parse_rays(cls, value: Any) -> Any:
        if isinstance(value, list):
            return [_to_vector(r) if isinstance(r, list) else r for r in value]
        return value

    @model_validator(mode="after")
    def check_rank(self) -> "ConeFile":
        lengths = {len(r) for r in self.rays}
        if len(lengths) != 1:
            raise ValueError("all rays must have the same length")
        if self.rank is not None and lengths != {self.rank}:
            raise ValueError(f"rays do not have rank {self.rank}")
        return self


class RootPairEntry(BaseModel):
    e1: List[int]
    e2: List[int]

    @field_validator("e1", "e2", mode="before")
    @classmethod
    def parse_vector(cls, value: Any) -> Any:
        return _to_vector(value) if isinstance(value, list) else value


class RootPairFile(BaseModel):
    """Root pairs indexed by the rays of tau."""

    tau: List[int]
    pairs: List[RootPairEntry]

    @model_validator(mode="after")
    def check_counts(self) -> "RootPairFile":
        if len(self.pairs) != len(self.tau):
            raise ValueError(f"expected {len(self.tau)} pairs, got {len(self.pairs)}")
        return self


class MonoidFile(RootPairFile):
    """A cone, a face and its root pairs."""

    cone: ConeFile

    @model_validator(mode="after")
    def check_ranks(self) -> "MonoidFile":
        n = len(self.cone.rays[0])
        for entry in self.pairs:
            if len(entry.e1) != n or len(entry.e2) != n:
                raise ValueError(f"root vectors must have rank {n}")
        for index in self.tau:
            if not 0 <= index < len(self.cone.rays):
                raise ValueError(f"tau ray index {index} out of range")
        return self


class PointFile(BaseModel):
    """
    A point of the variety.

    Either ``face_rays`` with torus ``values`` (on ``basis`` when given, else on the
    canonical basis of the orbit lattice), or ``generator_values``: the values
    chi^{q_i} on the semigroup generators.
    """

    face_rays: Optional[List[int]] = None
    basis: Optional[List[List[int]]] = None
    values: Optional[List[RationalLike]] = None
    generator_values: Optional[List[RationalLike]] = None

    @model_validator(mode="after")
    def check_form(self) -> "PointFile":
        by_orbit = self.face_rays is not None and self.values is not None
        if by_orbit == (self.generator_values is not None):
            raise ValueError("give either face_rays with values, or generator_values")
        for value in (self.values or []) + (self.generator_values or []):
            _to_rational(value)
        return self

    def rational_values(self) -> List[Fraction]:
        return [_to_rational(v) for v in self.values or []]

    def rational_generator_values(self) -> List[Fraction]:
        return [_to_rational(v) for v in self.generator_values or []]


# ============================================================================
# Outputs
# ============================================================================


class CenterLocusFile(BaseModel):
    active: bool
    index_bound: int
    vanishing: List[List[IntLike]]
    equalities: List[Dict[str, Any]]
    equations: List[str]


class IdempotentLocusFile(BaseModel):
    face: List[int]
    case: str
    equations: List[List[IntLike]]
    rendered: List[str]
    witness: Optional[Dict[str, Any]] = None
    certificate: Dict[str, Any] = {}
    closure_faces: List[List[int]] = []


class RunReport(BaseModel):
    """Outcome of a verification command."""

    command: str
    suite: str
    seed: int
    passed: int
    failed: int
    ok: bool
    counterexamples: List[Dict[str, Any]] = []
    notes: List[str] = []
    timing: Optional[float] = None


class ErrorResponse(BaseModel):
    """Error response."""

    code: str
    message: str
    fields: Optional[Any] = None

