"""Verification reports shared by the check suites."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List


@dataclass
class Counterexample:
    """A failed check with its inputs and both sides of the failed equality."""

    check: str
    sample: int
    inputs: Dict[str, Any]
    expected: Any
    actual: Any


@dataclass
class VerificationReport:
    """Pass/fail counts for one suite run."""

    suite: str
    seed: int
    passed: int = 0
    failed: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(
        self,
        check: str,
        sample: int,
        success: bool,
        inputs: Dict[str, Any],
        expected: Any = None,
        actual: Any = None,
    ) -> bool:
        """Count one check; keep a counterexample when it fails."""
        if success:
            self.passed += 1
        else:
            self.failed += 1
            self.counterexamples.append(
                Counterexample(check, sample, inputs, expected, actual)
            )
        return success

    def extend(self, other: "VerificationReport") -> None:
        """Absorb the counts of a sub-suite."""
        self.passed += other.passed
        self.failed += other.failed
        self.counterexamples.extend(other.counterexamples)
        self.notes.extend(other.notes)


def jsonable(value: Any) -> Any:
    """Convert counterexample payloads to plain JSON-compatible values."""
    if hasattr(value, "as_dict"):
        return jsonable(value.as_dict())
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return value if abs(value) < 2**63 else str(value)
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [jsonable(item) for item in value]
    return str(value)


def format_rational(value: Fraction) -> str:
    """Render a rational as ``p/q`` (or ``p`` when integral)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer string."""
    return Fraction(text.strip())
