"""
The acceptance suite behind `verify`.

Every check returns ExperimentReports; a blocking MISMATCH fails the run, the degree >= 3
probe is recorded but never blocks. QUICK shrinks the sizes for smoke runs.
"""
import itertools
import math
import time
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from constants import get_constants
from errors import BudgetExceeded
from experiments.codes import OVERFLOW
from experiments.enumeration import (admissible_residues, enumerate_lifts, lee_transport_check,
                                     residue_rank_census)
from experiments.probe import probe_conjecture
from experiments.report import ExperimentReport, exact_report, statistical_report
from experiments.sampling import SamplerConfig, sample_joint_distribution
from experiments.sweep import full_report, lifts_report
from formulas import ProblemInstance, aut_count_formula, main3_count, main_limit, rank_count_formula
from logger import logger_experiment
from matrix_ops import (BlockPartition, RingMatrix, block_col_op, block_row_op, random_block_op, random_matrix,
                        residue_rank, row_op_matrix)
from module_theory import ModuleType, brute_force_aut_count, enumerate_module_types, split_prime_power
from normal_form import minor_gcd_valuations, minor_identity_holds, smith_normal_form
from ring_core import PolySpec, RingDescriptor, find_irreducible


@dataclass(frozen=True)
class SuiteSize:
    primes: Tuple[int, ...]
    max_n: int
    max_N: int
    aut_qs: Tuple[int, ...]
    aut_order_log2: int
    census: Tuple[Tuple[int, int], ...]
    random_cases: int
    samples: int
    residue_work_log2: int
    transport_n: int


FULL = SuiteSize(primes=(2, 3), max_n=3, max_N=2, aut_qs=(2, 3, 4), aut_order_log2=12,
                 census=((1, 2), (2, 2), (3, 2), (1, 3), (2, 3), (3, 3), (2, 4)),
                 random_cases=1000, samples=10 ** 6, residue_work_log2=22, transport_n=3)
QUICK = SuiteSize(primes=(2,), max_n=2, max_N=1, aut_qs=(2, 4), aut_order_log2=6,
                  census=((1, 2), (2, 2), (2, 3), (2, 4)),
                  random_cases=100, samples=10 ** 5, residue_work_log2=16, transport_n=2)


def _t(p: int) -> PolySpec:
    return PolySpec((0,), p)


def _t_minus_1(p: int) -> PolySpec:
    return PolySpec((-1,), p)


def _t2_t_1() -> PolySpec:
    return PolySpec((1, 1), 2)


def _spread(items: Sequence, limit: int) -> list:
    """At most `limit` items, evenly spaced and deterministic."""
    if len(items) <= limit:
        return list(items)
    step = len(items) / limit
    return [items[int(i * step)] for i in range(limit)]


def residue_sweep_report(name: str, inst: ProblemInstance, size: SuiteSize,
                         workers: Optional[int] = None) -> Optional[ExperimentReport]:
    """
    enumerate_lifts on every admissible residue matrix (an even subset when the total work
    exceeds 2^residue_work_log2) against main3_count. None when one lift set is over budget.
    """
    started = time.perf_counter()
    lifts = inst.p ** (inst.N * inst.n * inst.n)
    if lifts > 1 << get_constants()["LIFT_BUDGET_LOG2"]:
        logger_experiment.info(f"⏭️ {name}: {lifts} lifts per residue is over budget, skipped")
        return None
    residues = admissible_residues(inst.p, inst.n, inst.polys, inst.ranks)
    if not residues:
        logger_experiment.info(f"⏭️ {name}: no admissible residue matrix for {inst.describe()}")
        return None
    chosen = _spread(residues, max(1, (1 << size.residue_work_log2) // lifts))
    counts = [enumerate_lifts(x, inst.p, inst.N, inst.polys, inst.targets, workers) for x in chosen]
    predicted = main3_count(inst)
    # any deviating count is the one reported
    observed = next((c for c in counts if c != predicted), counts[0])
    return exact_report(name, inst.describe(), observed, predicted, runtime=time.perf_counter() - started,
                        residues_checked=len(chosen), residues_admissible=len(residues),
                        distinct_counts=sorted(set(counts)))


def check_main3_degree_one(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    reports = []
    for p in size.primes:
        for n in range(1, size.max_n + 1):
            for N in range(1, size.max_N + 1):
                for g in enumerate_module_types(N * n, 1, max_exponent=N):
                    if g.residue_rank() > n:
                        continue
                    inst = ProblemInstance(p, (_t(p),), (g,), n, N)
                    report = residue_sweep_report("main3-degree1", inst, size, workers)
                    if report is not None:
                        reports.append(report)
    return reports


def check_main3_degree_two(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    poly = _t2_t_1()
    reports = []
    for N, text in ((1, "0"), (1, "1^1"), (2, "2^1"), (2, "1^1")):
        inst = ProblemInstance(2, (poly,), (ModuleType.parse(text, 2),), 2, N)
        report = residue_sweep_report("main3-degree2", inst, size, workers)
        if report is not None:
            reports.append(report)
    return reports


def check_main3_joint(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    z2 = ModuleType.parse("1^1")
    inst = ProblemInstance(2, (_t(2), _t_minus_1(2)), (z2, z2), 2, 1)
    xbar = RingMatrix.diagonal(RingDescriptor.of(2, 1), [0, 1])
    reports = [lifts_report(inst, xbar, workers, name="main3-joint")]
    reports.append(residue_sweep_report("main3-joint", inst, size, workers))
    for n in range(2, size.max_n + 1):
        mixed = ProblemInstance(2, (_t(2), _t2_t_1()), (ModuleType(), ModuleType.parse("1^1", 2)), n, 1)
        reports.append(residue_sweep_report("main3-joint-mixed", mixed, size, workers))
    return [r for r in reports if r is not None]


def check_residue_independence(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    """All rank-1 residue matrices give one count."""
    started = time.perf_counter()
    inst = ProblemInstance(2, (_t(2),), (ModuleType.parse("1^1"),), 2, 1)
    residues = admissible_residues(2, 2, inst.polys, inst.ranks)
    counts = [enumerate_lifts(x, 2, 1, inst.polys, inst.targets, workers) for x in residues]
    return [exact_report("residue-independence", inst.describe(), len(set(counts)), 1,
                         runtime=time.perf_counter() - started, residues=len(residues), counts=sorted(set(counts)))]


def check_main2_identity(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    cases = [
        (2, 1, 1, ("0,1",), ("1^1",)),
        (2, 2, 1, ("0,1",), ("0",)),
        (2, 2, 1, ("0,1",), ("1^1",)),
        (2, 2, 1, ("0,1",), ("1^2",)),
        (2, 2, 1, ("0,1", "-1,1"), ("1^1", "1^1")),
        (2, 2, 1, ("1,1,1",), ("1^1",)),
        (2, 2, 2, ("0,1",), ("2^1",)),
    ]
    if size is FULL:
        cases += [(3, 2, 1, ("0,1",), ("1^1",)), (2, 3, 1, ("0,1",), ("1^1",)),
                  (2, 3, 1, ("0,1", "1,1,1"), ("0", "1^1"))]
    reports = []
    for p, n, N, polys, targets in cases:
        inst = ProblemInstance.parse(p, N, n, polys, targets)
        try:
            reports.append(full_report(inst, workers))
        except BudgetExceeded as e:
            logger_experiment.info(f"⏭️ main2 identity on {inst.describe()}: {e}")
    return reports


def check_aut_oracle(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    reports = []
    for q in size.aut_qs:
        started = time.perf_counter()
        _, d = split_prime_power(q)
        max_order = int(math.floor(size.aut_order_log2 / math.log2(q) + 1e-9))
        agree, checked, skipped, disagreements = 0, 0, 0, []
        for g in enumerate_module_types(max_order, d):
            try:
                oracle = brute_force_aut_count(g, q)
            except BudgetExceeded:
                skipped += 1
                continue
            checked += 1
            if oracle == aut_count_formula(g, q):
                agree += 1
            else:
                disagreements.append(g.format())
        reports.append(exact_report("aut-oracle", {"q": q, "max_order_log_q": max_order}, agree, checked,
                                    runtime=time.perf_counter() - started, skipped=skipped,
                                    disagreements=disagreements))
    return reports


def rank_census_over(q: int, n: int) -> dict:
    """{rank: count} over all n x n matrices over F_q."""
    p, d = split_prime_power(q)
    if d == 1:
        census = residue_rank_census(p, n, [_t(p)])
        return {n - coranks[0]: count for coranks, count in census.items()}
    ring = RingDescriptor.of(p, 1, find_irreducible(p, d))
    out = {}
    elements = list(ring.elements())
    for entries in itertools.product(elements, repeat=n * n):
        r = residue_rank(RingMatrix(ring, n, n, entries))
        out[r] = out.get(r, 0) + 1
    return out


def check_rank_counts(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    reports = []
    for n, q in size.census:
        started = time.perf_counter()
        census = rank_census_over(q, n)
        formula = {r: rank_count_formula(n, r, q) for r in range(n + 1)}
        agree = sum(1 for r in range(n + 1) if census.get(r, 0) == formula[r])
        reports.append(exact_report("rank-counts", {"n": n, "q": q}, agree, n + 1,
                                    runtime=time.perf_counter() - started,
                                    census=census, formula=formula, total=sum(census.values()),
                                    total_matches=sum(census.values()) == q ** (n * n)))
    return reports


def check_lee_transport(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    reports = []
    started = time.perf_counter()
    poly = _t2_t_1()
    agree, total = lee_transport_check(2, size.transport_n, 2, poly, workers=workers)
    reports.append(exact_report("lee-transport", {"p": 2, "n": size.transport_n, "m": 2, "poly": str(poly),
                                                  "cases": "exhaustive"},
                                agree, total, runtime=time.perf_counter() - started))
    rng = np.random.default_rng(seed)
    for p in (2, 3):
        started = time.perf_counter()
        cubic = find_irreducible(p, 3)
        mats = rng.integers(0, p ** 2, size=(size.random_cases, 3, 3), dtype=np.int64)
        agree, total = lee_transport_check(p, 3, 2, cubic, mats, workers=workers)
        reports.append(exact_report("lee-transport", {"p": p, "n": 3, "m": 2, "poly": str(cubic),
                                                      "cases": "random"},
                                    agree, total, runtime=time.perf_counter() - started, seed=seed))
    return reports


def check_snf(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    rng = np.random.default_rng(seed)
    reports = []
    rings = (RingDescriptor.of(2, 3), RingDescriptor.of(2, 2, _t2_t_1()))
    for ring in rings:
        started = time.perf_counter()
        agree = 0
        for _ in range(size.random_cases):
            n = int(rng.integers(1, 5))
            x = random_matrix(ring, n, n, rng)
            if minor_identity_holds(smith_normal_form(x).exponents, minor_gcd_valuations(x), ring.k):
                agree += 1
        reports.append(exact_report("snf-minors", {"ring": str(ring)}, agree, size.random_cases,
                                    runtime=time.perf_counter() - started, seed=seed))

    ring = rings[0]
    started = time.perf_counter()
    agree = 0
    part = BlockPartition.of([1, 2, 1])
    for _ in range(size.random_cases):
        x = random_matrix(ring, 4, 4, rng)
        before = smith_normal_form(x).exponents
        y, ok = x, True
        # a random word of row and column operations
        for _ in range(int(rng.integers(1, 7))):
            op = random_block_op(part, ring, rng)
            if rng.integers(0, 2):
                rowed = block_row_op(y, part, op)
                ok = ok and row_op_matrix(part, op, ring) @ y == rowed
                y = rowed
            else:
                column = block_col_op(y, part, op.transposed())
                ok = ok and column == block_row_op(y.transpose(), part, op).transpose()
                y = column
        if ok and smith_normal_form(y).exponents == before:
            agree += 1
    reports.append(exact_report("snf-block-invariance", {"ring": str(ring), "partition": [1, 2, 1]},
                                agree, size.random_cases, runtime=time.perf_counter() - started, seed=seed))
    return reports


def check_limit_sampling(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    reports = []
    cfg = SamplerConfig(seed=seed, samples=size.samples, workers=workers)
    for polys, target_sets in (((_t(2),), (("0",), ("1^1",))),
                               ((_t(2), _t_minus_1(2)), (("0", "0"),))):
        started = time.perf_counter()
        table = sample_joint_distribution(2, 8, 2, polys, cfg)
        runtime = time.perf_counter() - started
        for texts in target_sets:
            inst = ProblemInstance(2, polys, tuple(ModuleType.parse(t) for t in texts), 8, 2)
            limit = main_limit(inst)
            reports.append(statistical_report("main-limit", inst.describe(), table.frequency(tuple(g.format() for g in inst.targets)),
                                              limit.value, table.samples, seed, runtime=runtime,
                                              truncation_index=limit.truncation_index,
                                              overflow=table.counts.get(OVERFLOW, 0)))
    return reports


def check_probe(size: SuiteSize, workers: Optional[int] = None, seed: int = 0) -> List[ExperimentReport]:
    inst = ProblemInstance(2, (PolySpec((1, 1, 0), 2),), (ModuleType.parse("1^1", 3),), 3, 1)
    return [probe_conjecture(inst, workers=workers)]


CHECKS: List[Tuple[str, Callable]] = [
    ("main3 exact, degree 1", check_main3_degree_one),
    ("main3 exact, degree 2", check_main3_degree_two),
    ("main3 exact, joint", check_main3_joint),
    ("residue independence", check_residue_independence),
    ("main2 identity", check_main2_identity),
    ("automorphism counts", check_aut_oracle),
    ("rank counts", check_rank_counts),
    ("Lee transport", check_lee_transport),
    ("SNF and block operations", check_snf),
    ("large-n limit, sampled", check_limit_sampling),
    ("degree >= 3 probe", check_probe),
]


def run_acceptance(quick: bool = False, workers: Optional[int] = None, seed: int = 0,
                   only: Optional[Sequence[str]] = None) -> List[Tuple[str, List[ExperimentReport]]]:
    """
    Run the suite in order.

    Args:
        quick (bool, optional): use the QUICK sizes.
        workers (int, optional): process count for the engines.
        seed (int, optional): seed of the randomized and sampled checks.
        only (Sequence[str], optional): run only checks whose title contains one of these words.

    Returns:
        list: (check title, reports) pairs.
    """
    size = QUICK if quick else FULL
    out = []
    for title, check in CHECKS:
        if only and not any(word.lower() in title.lower() for word in only):
            continue
        started = time.perf_counter()
        reports = check(size, workers, seed)
        failed = [r for r in reports if not r.passed]
        logger_experiment.info(f"🏁 {title}: {len(reports) - len(failed)}/{len(reports)} passed "
                               f"in {time.perf_counter() - started:.1f}s")
        out.append((title, reports))
    return out
