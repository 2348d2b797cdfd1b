"""Shared utilities package."""

from .exceptions import RootMonoidError
from .reporting import Counterexample, VerificationReport
from .rng import make_rng, spawn_rngs

__all__ = ["RootMonoidError", "Counterexample", "VerificationReport", "make_rng", "spawn_rngs"]
