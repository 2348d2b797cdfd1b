"""Exception hierarchy for root monoid computations."""

from typing import Any, Dict, List, Optional


class RootMonoidError(Exception):
    """Base error for all library failures."""

    code = "root_monoid_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class DimensionMismatchError(RootMonoidError):
    """Vectors of different ambient rank were combined."""

    code = "dimension_mismatch"


class ConeError(RootMonoidError):
    """Invalid cone description."""

    code = "invalid_cone"


class NotFullDimensionalError(ConeError):
    """Cone does not span the ambient space."""

    code = "not_full_dimensional"


class FaceError(RootMonoidError):
    """Ray set is not a face of the cone, or the face belongs to another cone."""

    code = "invalid_face"


class SublatticeError(RootMonoidError):
    """Vector is not in the integer span of the given basis."""

    code = "not_in_sublattice"


class HilbertBasisOverflowError(RootMonoidError):
    """Bounded enumeration exceeded its point budget."""

    code = "hilbert_overflow"


class NotRegularFaceError(RootMonoidError):
    """Face rays do not extend to a lattice basis."""

    code = "not_regular_face"


class IncompatibleRootsError(RootMonoidError):
    """Root pairs violate the compatibility conditions."""

    code = "incompatible_roots"

    def __init__(self, message: str, violations: List[Dict[str, Any]]):
        super().__init__(message, {"violations": violations})
        self.violations = violations


class NotInSemigroupError(RootMonoidError):
    """Character is not in the semigroup of the cone."""

    code = "not_in_semigroup"


class ChartError(RootMonoidError):
    """Character is not regular on the chart containing the point."""

    code = "outside_chart"


class NotInvertibleError(RootMonoidError):
    """Point lies outside the unit group."""

    code = "not_invertible"


class InconsistentPointError(RootMonoidError):
    """Generator values do not define a semigroup homomorphism."""

    code = "inconsistent_point"


class EmptyLocusError(RootMonoidError):
    """The idempotent locus of the orbit is empty."""

    code = "empty_locus"


class PatternError(RootMonoidError):
    """Root membership pattern differs from the one an operation requires."""

    code = "pattern_violated"


class DegreeBoundError(RootMonoidError):
    """Degree bound too small for the requested enumeration."""

    code = "degree_bound"


class PresetError(RootMonoidError):
    """Preset parameters violate their constraints."""

    code = "invalid_preset"
