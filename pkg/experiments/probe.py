"""
Empirical probe of the exact lift count for polynomials of any degree.

The enumerated count is compared with the closed form that is proven for degrees <= 2;
a mismatch is a falsification datum, a match is evidence. Neither is asserted.
"""
import time
from fractions import Fraction
from typing import Optional

from errors import DomainError
from experiments.enumeration import admissible_residues, enumerate_full, enumerate_lifts
from experiments.report import ExperimentReport, exact_report
from formulas import ProblemInstance, main2_check_rhs, main3_count
from logger import logger_experiment
from matrix_ops import RingMatrix
from utils.constants import VERDICT_MISMATCH


def probe_conjecture(inst: ProblemInstance,
                     xbar: Optional[RingMatrix] = None,
                     mode: str = "lifts",
                     workers: Optional[int] = None,
                     budget_log2: Optional[int] = None) -> ExperimentReport:
    """
    Enumerate and compare with the degree-agnostic closed form.

    Args:
        inst (ProblemInstance): polynomials of any degree.
        xbar (RingMatrix, optional): residue matrix; the first admissible one is used when omitted.
        mode (str, optional): "lifts" (one residue matrix) or "full" (all of Mat_n(Z/p^{N+1})).
        workers (int, optional): process count.
        budget_log2 (int, optional): overrides the engine budget.

    Returns:
        ExperimentReport: never blocking when some degree exceeds 2.
    """
    started = time.perf_counter()
    regime = "theorem" if max(inst.degrees) <= 2 else "conjecture"
    details = {"regime": regime, "mode": mode}
    if inst.warnings:
        details["warnings"] = list(inst.warnings)

    if mode == "lifts":
        if xbar is None:
            candidates = admissible_residues(inst.p, inst.n, inst.polys, inst.ranks, budget_log2)
            if not candidates:
                raise DomainError(f"no residue matrix has ranks {inst.ranks} for {inst.describe()}")
            xbar = candidates[0]
        details["xbar"] = str(xbar)
        observed = enumerate_lifts(xbar, inst.p, inst.N, inst.polys, inst.targets, workers, budget_log2)
        predicted = main3_count(inst)
    elif mode == "full":
        full = enumerate_full(inst.p, inst.n, inst.N, inst.polys, inst.targets, workers, budget_log2)
        observed = full.count
        residue_probability = Fraction(full.residue_count, full.residue_total)
        predicted = main2_check_rhs(inst, residue_probability) * full.total
        details.update(full.to_dict())
    else:
        raise DomainError(f"unknown probe mode {mode!r}")

    report = exact_report("probe-conjecture", inst.describe(), observed, predicted,
                          runtime=time.perf_counter() - started, blocking=regime == "theorem", **details)
    if report.verdict == VERDICT_MISMATCH:
        logger_experiment.warning(f"🚨 probe MISMATCH in the {regime} regime: observed {observed}, "
                                  f"closed form {predicted} for {inst.describe()}")
    else:
        logger_experiment.info(f"✅ probe {report.verdict} ({regime}): {observed} for {inst.describe()}")
    return report

