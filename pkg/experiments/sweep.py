"""
Declarative experiment sweeps and the report builders they share with `verify`.

A sweep file is JSON: either a list of instances or {"name": ..., "instances": [...]}.
Each instance names a kind (lifts, full, sample, probe) and its parameters:

    {"kind": "lifts", "p": 2, "N": 1, "n": 2, "polys": ["1,1,1"], "targets": ["1^1"],
     "xbar": "0,1;1,1", "budget_log2": 20}
"""
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional

from config import REPORT_PATH, SWEEP_CONFIG_PATH
from errors import CokernelError, DomainError
from experiments.codes import OVERFLOW
from experiments.enumeration import admissible_residues, enumerate_full, enumerate_lifts
from experiments.probe import probe_conjecture
from experiments.report import ExperimentReport, exact_report, statistical_report
from experiments.sampling import SamplerConfig, sample_joint_distribution
from formulas import ProblemInstance, main2_check_rhs, main3_count, main_limit
from logger import logger_error, logger_experiment
from matrix_ops import RingMatrix
from result import write_reports
from ring_core import RingDescriptor
from utils.parse_function import parse_matrix
from utils.utils_general import load_json
from utils.utils_time import run_stamp

KINDS = ("lifts", "full", "sample", "probe")


def lifts_report(inst: ProblemInstance,
                 xbar: Optional[RingMatrix] = None,
                 workers: Optional[int] = None,
                 budget_log2: Optional[int] = None,
                 name: str = "main3-lifts") -> ExperimentReport:
    """Exhaustive lift count against the exact closed form, on xbar or the first admissible residue."""
    started = time.perf_counter()
    if xbar is None:
        candidates = admissible_residues(inst.p, inst.n, inst.polys, inst.ranks, budget_log2)
        if not candidates:
            raise DomainError(f"no residue matrix has ranks {inst.ranks} for {inst.describe()}")
        xbar = candidates[0]
    observed = enumerate_lifts(xbar, inst.p, inst.N, inst.polys, inst.targets, workers, budget_log2)
    return exact_report(name, inst.describe(), observed, main3_count(inst),
                        runtime=time.perf_counter() - started, xbar=str(xbar))


def full_report(inst: ProblemInstance,
                workers: Optional[int] = None,
                budget_log2: Optional[int] = None,
                name: str = "main2-identity") -> ExperimentReport:
    """Probability over all of Mat_n(Z/p^{N+1}) against the constant times the residue probability."""
    started = time.perf_counter()
    full = enumerate_full(inst.p, inst.n, inst.N, inst.polys, inst.targets, workers, budget_log2)
    observed = Fraction(full.count, full.total)
    predicted = main2_check_rhs(inst, Fraction(full.residue_count, full.residue_total))
    return exact_report(name, inst.describe(), observed, predicted,
                        runtime=time.perf_counter() - started, **full.to_dict())


def sample_report(inst: ProblemInstance, cfg: SamplerConfig, name: str = "main-limit") -> ExperimentReport:
    """Empirical joint frequency of the targets against the large-n limit."""
    started = time.perf_counter()
    table = sample_joint_distribution(inst.p, inst.n, inst.N, inst.polys, cfg)
    key = tuple(g.format() for g in inst.targets)
    limit = main_limit(inst)
    return statistical_report(name, inst.describe(), table.frequency(key), limit.value, table.samples, cfg.seed,
                              runtime=time.perf_counter() - started,
                              truncation_index=limit.truncation_index,
                              overflow=table.counts.get(OVERFLOW, 0))


def run_instance(entry: Dict[str, Any], workers: Optional[int] = None) -> ExperimentReport:
    kind = entry.get("kind", "lifts")
    if kind not in KINDS:
        raise DomainError(f"unknown sweep kind {kind!r}, expected one of {KINDS}")
    inst = ProblemInstance.parse(int(entry["p"]), int(entry["N"]), int(entry["n"]),
                                 entry["polys"], entry["targets"])
    budget_log2 = entry.get("budget_log2")
    xbar = None
    if entry.get("xbar"):
        xbar = parse_matrix(str(entry["xbar"]), RingDescriptor.of(inst.p, 1))
    name = entry.get("name")
    if kind == "lifts":
        return lifts_report(inst, xbar, workers, budget_log2, name=name or "main3-lifts")
    if kind == "full":
        return full_report(inst, workers, budget_log2, name=name or "main2-identity")
    if kind == "sample":
        cfg = SamplerConfig(seed=int(entry.get("seed", 0)), samples=int(entry.get("samples", 10 ** 5)),
                            workers=workers)
        return sample_report(inst, cfg, name=name or "main-limit")
    report = probe_conjecture(inst, xbar, entry.get("mode", "lifts"), workers, budget_log2)
    if name:
        report.name = name
    return report


def run_sweep(config_path: Optional[str] = None,
              workers: Optional[int] = None,
              report_dir: str = REPORT_PATH) -> List[ExperimentReport]:
    """
    Run every instance of a sweep file and archive the reports as JSON and CSV.

    Args:
        config_path (str, optional): sweep file; COKERNEL_SWEEP_CONFIG when omitted.
        workers (int, optional): process count for every engine.
        report_dir (str, optional): where the reports are written.

    Returns:
        list: one ExperimentReport per instance that ran. Failing instances are logged and skipped.
    """
    config_path = config_path or SWEEP_CONFIG_PATH
    config = load_json(config_path)
    if config is None:
        raise DomainError(f"cannot read sweep config {config_path}")
    entries = config.get("instances", []) if isinstance(config, dict) else config
    sweep_name = config.get("name", "sweep") if isinstance(config, dict) else "sweep"
    logger_experiment.info(f"🧪 sweep {sweep_name}: {len(entries)} instances from {config_path}")

    reports = []
    for i, entry in enumerate(entries):
        try:
            report = run_instance(entry, workers)
        except CokernelError as e:
            logger_error.error(f"❌ sweep instance {i} ({entry}) failed: {e}")
            continue
        logger_experiment.info(f"🧪 [{i + 1}/{len(entries)}] {report.name}: {report.verdict}")
        reports.append(report)
    write_reports(reports, report_dir, f"{sweep_name}_{run_stamp()}")
    return reports
