"""
Exception hierarchy shared by every package.

Value-level precondition failures subclass ValueError as well, so callers that only
know the standard library still catch them.
"""
from typing import Dict, List, Sequence


class CokernelError(Exception):
    """Base class for every error raised by the library."""


class StructuralError(CokernelError, ValueError):
    """Operands live in different rings, or shapes do not conform."""


class DomainError(CokernelError, ValueError):
    """An argument violates a value precondition (non-unit inverse, reducible polynomial, ...)."""


class BudgetExceeded(CokernelError):
    """An exhaustive engine was asked to visit more objects than its budget allows."""

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"{what}: {size} objects exceeds budget {budget}")
        self.what = what
        self.size = size
        self.budget = budget


class PrecisionSaturated(CokernelError):
    """An SNF exponent equals the modulus exponent k, so the cokernel is not resolved at this precision."""

    def __init__(self, exponents: Sequence[int], k: int):
        super().__init__(f"precision-saturated: exponents {list(exponents)} reach k={k}")
        self.exponents = list(exponents)
        self.k = k


class RankHypothesisError(CokernelError):
    """The residue matrix does not have the residue ranks the targets require."""

    def __init__(self, mismatches: List[Dict[str, int]]):
        detail = ", ".join(f"poly {m['index']}: corank {m['observed']} != rank {m['expected']}" for m in mismatches)
        super().__init__(f"rank hypothesis violated ({detail})")
        self.mismatches = mismatches


class UnsupportedDimension(CokernelError):
    """The requested computation does not scale to this matrix size."""


class NonIntegralCount(CokernelError):
    """A closed-form count that must be an integer reduced to a proper fraction."""
