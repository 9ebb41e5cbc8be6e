"""
Experiment reports and their verdicts.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from scipy import stats

from config import SIGMA_MULTIPLIER, STATISTICAL_BAND
from utils.constants import VERDICT_EXACT_MATCH, VERDICT_MISMATCH, VERDICT_WITHIN_3_SIGMA

Number = Union[int, float, Fraction]


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class ExperimentReport:
    """
    Observed value next to its prediction.

    For exact reports observed and predicted are integers or fractions; for statistical
    reports observed is an empirical frequency over `samples` draws.
    """
    name: str
    instance: Dict[str, Any]
    observed: Number
    predicted: Number
    verdict: str
    runtime: float = 0.0
    seed: Optional[int] = None
    samples: Optional[int] = None
    sigma: Optional[float] = None
    band: Optional[float] = None
    blocking: bool = True
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict != VERDICT_MISMATCH

    def recompute_verdict(self) -> str:
        if self.samples is None:
            return exact_verdict(self.observed, self.predicted)
        return statistical_verdict(float(self.observed), float(self.predicted), self.samples)[0]

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "instance": _jsonable(self.instance),
            "observed": _jsonable(self.observed),
            "predicted": _jsonable(self.predicted),
            "verdict": self.verdict,
            "runtime": round(self.runtime, 3),
            "blocking": self.blocking,
        }
        for key in ("seed", "samples", "sigma", "band"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        if self.details:
            out["details"] = _jsonable(self.details)
        return out

    def to_row(self) -> dict:
        """Flat record for CSV output."""
        return {
            "name": self.name,
            "instance": ";".join(f"{k}={v}" for k, v in _jsonable(self.instance).items()),
            "observed": str(_jsonable(self.observed)),
            "predicted": str(_jsonable(self.predicted)),
            "verdict": self.verdict,
            "runtime": round(self.runtime, 3),
            "seed": self.seed,
            "samples": self.samples,
        }


def exact_verdict(observed: Number, predicted: Number) -> str:
    return VERDICT_EXACT_MATCH if Fraction(observed) == Fraction(predicted) else VERDICT_MISMATCH


def statistical_verdict(frequency: float, predicted: float, samples: int):
    """
    Accept when |frequency - predicted| <= max(3 sigma, STATISTICAL_BAND).

    Returns:
        tuple: (verdict, sigma, band, two-sided normal tail probability).
    """
    sigma = math.sqrt(max(predicted * (1 - predicted), 0.0) / samples)
    band = max(SIGMA_MULTIPLIER * sigma, STATISTICAL_BAND)
    deviation = abs(frequency - predicted)
    tail = float(2 * stats.norm.sf(deviation / sigma)) if sigma > 0 else float(deviation == 0)
    verdict = VERDICT_WITHIN_3_SIGMA if deviation <= band else VERDICT_MISMATCH
    return verdict, sigma, band, tail


def exact_report(name: str, instance: dict, observed: Number, predicted: Number,
                 runtime: float = 0.0, blocking: bool = True, **details) -> ExperimentReport:
    return ExperimentReport(name, instance, observed, predicted, exact_verdict(observed, predicted),
                            runtime=runtime, blocking=blocking, details=details)


def statistical_report(name: str, instance: dict, frequency: float, predicted: float, samples: int,
                       seed: int, runtime: float = 0.0, blocking: bool = True, **details) -> ExperimentReport:
    verdict, sigma, band, tail = statistical_verdict(frequency, predicted, samples)
    details["normal_tail_p"] = tail
    return ExperimentReport(name, instance, frequency, predicted, verdict, runtime=runtime, seed=seed,
                            samples=samples, sigma=sigma, band=band, blocking=blocking, details=details)
