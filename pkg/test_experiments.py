import json
from fractions import Fraction

import numpy as np
import pytest

from errors import BudgetExceeded, DomainError, RankHypothesisError
from experiments import (OVERFLOW, ExperimentReport, SamplerConfig, admissible_residues, compare_to_exact, enumerate_full,
                         enumerate_l1deg1_lifts, enumerate_lifts, enumerate_reduced_block, exact_verdict,
                         full_histogram, lee_transport_check, lift_histogram, probe_conjecture,
                         residue_coranks, residue_rank_census, run_sweep, sample_joint_distribution,
                         exact_report, statistical_report, statistical_verdict)
from formulas import ProblemInstance, main3_count
from matrix_ops import RingMatrix, companion
from module_theory import ModuleType
from ring_core import PolySpec, RingDescriptor
from utils.constants import VERDICT_EXACT_MATCH, VERDICT_MISMATCH, VERDICT_WITHIN_3_SIGMA

F2 = RingDescriptor.of(2, 1)
T = PolySpec((0,), 2)
T_PLUS_1 = PolySpec((1,), 2)
QUADRATIC = PolySpec((1, 1), 2)
CUBIC = PolySpec((1, 1, 0), 2)
G1 = ModuleType.parse("1^1")


def test_enumerate_lifts_examples():
    assert enumerate_lifts(RingMatrix.from_rows(F2, [[0]]), 2, 1, [T], [G1], workers=1) == 1
    assert enumerate_lifts(companion(QUADRATIC, F2), 2, 1, [QUADRATIC], [ModuleType.parse("1^1", 2)],
                           workers=1) == 12
    assert enumerate_lifts(RingMatrix.diagonal(F2, [0, 1]), 2, 1, [T, T_PLUS_1], [G1, G1], workers=1) == 4


def test_enumerate_lifts_rank_hypothesis():
    with pytest.raises(RankHypothesisError) as info:
        enumerate_lifts(RingMatrix.from_rows(F2, [[1]]), 2, 1, [T], [G1], workers=1)
    assert info.value.mismatches[0]["observed"] == 0


def test_enumerate_lifts_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_lifts(RingMatrix.diagonal(F2, [0, 1]), 2, 1, [T], [G1], workers=1, budget_log2=3)


def test_targets_beyond_the_precision_are_rejected():
    # exponent N+1 would collide with the code of a saturated cokernel
    too_deep = ModuleType.parse("2^1")
    with pytest.raises(DomainError):
        enumerate_lifts(RingMatrix.from_rows(F2, [[0]]), 2, 1, [T], [too_deep], workers=1)
    with pytest.raises(DomainError):
        enumerate_full(2, 1, 1, [T], [too_deep], workers=1)
    with pytest.raises(DomainError):
        enumerate_reduced_block(too_deep, 2, 1, 1, workers=1)
    assert enumerate_lifts(RingMatrix.from_rows(F2, [[0]]), 2, 2, [T], [too_deep], workers=1) == 1


def test_residue_coranks():
    assert residue_coranks(companion(QUADRATIC, F2), [QUADRATIC, T]) == [1, 0]
    assert residue_coranks(RingMatrix.zero(F2, 2), [T]) == [2]


def test_enumerate_full_examples():
    one = enumerate_full(2, 1, 1, [T], [G1], workers=1)
    assert (one.count, one.total) == (1, 4)
    invertible = enumerate_full(2, 2, 1, [T], [ModuleType.trivial()], workers=1)
    assert (invertible.count, invertible.total) == (96, 256)
    assert (invertible.residue_count, invertible.residue_total) == (6, 16)


def test_joint_full_count_is_the_sum_over_residues():
    inst = ProblemInstance(2, (T, T_PLUS_1), (G1, G1), 2, 1)
    full = enumerate_full(2, 2, 1, inst.polys, inst.targets, workers=1)
    assert full.residue_count == 6
    assert full.count == 24
    residues = admissible_residues(2, 2, inst.polys, inst.ranks)
    assert len(residues) == 6
    assert sum(enumerate_lifts(x, 2, 1, inst.polys, inst.targets, workers=1) for x in residues) == full.count
    assert Fraction(full.count, full.total) == Fraction(1, 4) * Fraction(6, 16)


def test_lift_count_does_not_depend_on_the_residue():
    inst = ProblemInstance(2, (T,), (G1,), 2, 1)
    residues = admissible_residues(2, 2, inst.polys, inst.ranks)
    assert len(residues) == 9
    counts = {enumerate_lifts(x, 2, 1, inst.polys, inst.targets, workers=1) for x in residues}
    assert counts == {main3_count(inst)} == {8}


def test_lift_histogram_covers_every_lift():
    hist = lift_histogram(RingMatrix.diagonal(F2, [0, 1]), 2, 1, [T], workers=1)
    assert sum(hist.values()) == 2 ** (1 * 2 * 2)
    assert hist == {("1^1",): 8, OVERFLOW: 8}
    f3 = RingDescriptor.of(3, 1)
    hist = lift_histogram(RingMatrix.zero(f3, 2), 3, 1, [T], workers=1)
    assert sum(hist.values()) == 3 ** (1 * 2 * 2)
    assert hist[OVERFLOW] > 0


def test_residue_rank_census():
    assert residue_rank_census(2, 2, [T], workers=1) == {(0,): 6, (1,): 9, (2,): 1}
    assert residue_rank_census(2, 2, [QUADRATIC], workers=1) == {(0,): 14, (1,): 2}


def test_joint_census_marginals():
    joint = residue_rank_census(2, 2, [T, QUADRATIC], workers=1)
    assert sum(joint.values()) == 16
    first = {}
    for (a, _), count in joint.items():
        first[(a,)] = first.get((a,), 0) + count
    assert first == residue_rank_census(2, 2, [T], workers=1)


def test_l1deg1_lifts():
    ring = RingDescriptor.of(2, 1, QUADRATIC)
    xbar = RingMatrix.from_rows(ring, [[0]])
    assert enumerate_l1deg1_lifts(ModuleType.parse("1^1"), QUADRATIC, 1, 1, xbar, workers=1) == 3
    with pytest.raises(RankHypothesisError):
        enumerate_l1deg1_lifts(ModuleType.parse("1^1"), QUADRATIC, 1, 1, RingMatrix.from_rows(ring, [[1]]),
                               workers=1)


def test_reduced_block():
    assert enumerate_reduced_block(G1, 2, 1, 1, workers=1) == 1
    assert enumerate_reduced_block(ModuleType.parse("1^2"), 2, 1, 2, workers=1) == 6


def test_lee_transport_exhaustive():
    assert lee_transport_check(2, 2, 2, QUADRATIC, workers=1) == (256, 256)
    assert lee_transport_check(2, 2, 2, T_PLUS_1, workers=1) == (256, 256)


def test_lee_transport_on_given_matrices():
    rng = np.random.default_rng(41)
    mats = rng.integers(0, 8, size=(200, 3, 3))
    assert lee_transport_check(2, 3, 3, CUBIC, mats=mats, workers=1) == (200, 200)


def test_sampling_is_deterministic_across_workers():
    cfg = SamplerConfig(seed=5, samples=5000, workers=1, block_size=1000)
    one = sample_joint_distribution(2, 2, 1, [T], cfg)
    two = sample_joint_distribution(2, 2, 1, [T], SamplerConfig(seed=5, samples=5000, workers=2, block_size=1000))
    assert one.counts == two.counts
    assert sum(one.counts.values()) == 5000
    other = sample_joint_distribution(2, 2, 1, [T], SamplerConfig(seed=6, samples=5000, workers=1, block_size=1000))
    assert other.counts != one.counts


def test_sampling_matches_the_exact_distribution():
    exact = full_histogram(2, 2, 1, [T], workers=1)
    assert sum(exact.values()) == 256
    probabilities = {key: Fraction(count, 256) for key, count in exact.items()}
    table = sample_joint_distribution(2, 2, 1, [T], SamplerConfig(seed=3, samples=40000, workers=1))
    assert set(table.counts) <= set(exact)
    assert OVERFLOW in exact
    assert compare_to_exact(table, probabilities)["p_value"] > 1e-4


def test_sampler_config_guards():
    with pytest.raises(DomainError):
        SamplerConfig(samples=0)
    with pytest.raises(DomainError):
        SamplerConfig(seed=-1)


def test_verdicts():
    assert exact_verdict(12, Fraction(12)) == VERDICT_EXACT_MATCH
    assert exact_verdict(11, 12) == VERDICT_MISMATCH
    verdict, sigma, band, _ = statistical_verdict(0.5, 0.5, 10000)
    assert verdict == VERDICT_WITHIN_3_SIGMA
    assert sigma == pytest.approx(0.005)
    assert band == pytest.approx(0.015)
    assert statistical_verdict(0.2, 0.5, 10000)[0] == VERDICT_MISMATCH
    assert statistical_verdict(0.29, 0.2887, 10 ** 8)[0] == VERDICT_WITHIN_3_SIGMA


def _from_row(row):
    parse = Fraction if row["samples"] is None else float
    return ExperimentReport(row["name"], {}, parse(row["observed"]), parse(row["predicted"]), row["verdict"],
                            samples=row["samples"], seed=row["seed"])


def test_verdicts_recompute_from_csv_rows():
    reports = [
        exact_report("lifts", {"p": 2}, 12, Fraction(12)),
        exact_report("full", {"p": 2}, Fraction(3, 8), Fraction(3, 8)),
        exact_report("full", {"p": 2}, Fraction(1, 4), Fraction(3, 8)),
        statistical_report("sample", {"p": 2}, 0.292, 0.2887880951, 10 ** 5, seed=1),
        statistical_report("sample", {"p": 2}, 0.31, 0.2887880951, 10 ** 6, seed=1),
    ]
    assert [r.verdict for r in reports] == [VERDICT_EXACT_MATCH, VERDICT_EXACT_MATCH, VERDICT_MISMATCH,
                                            VERDICT_WITHIN_3_SIGMA, VERDICT_MISMATCH]
    for report in reports:
        assert report.recompute_verdict() == report.verdict
        assert _from_row(report.to_row()).recompute_verdict() == report.verdict

def test_probe_in_the_proven_regime():
    inst = ProblemInstance(2, (QUADRATIC,), (ModuleType.parse("1^1", 2),), 2, 1)
    report = probe_conjecture(inst, companion(QUADRATIC, F2), workers=1)
    assert report.verdict == VERDICT_EXACT_MATCH
    assert report.blocking
    assert report.details["regime"] == "theorem"


def test_probe_beyond_degree_two_never_blocks():
    inst = ProblemInstance(2, (CUBIC,), (ModuleType.parse("1^1", 3),), 3, 1)
    report = probe_conjecture(inst, workers=1)
    assert not report.blocking
    assert report.details["regime"] == "conjecture"
    assert report.verdict in (VERDICT_EXACT_MATCH, VERDICT_MISMATCH)
    assert report.predicted == main3_count(inst)


def test_run_sweep_writes_reports(tmp_path):
    config = tmp_path / "sweep.json"
    config.write_text(json.dumps({"name": "tiny", "instances": [
        {"kind": "lifts", "p": 2, "N": 1, "n": 1, "polys": ["0,1"], "targets": ["1^1"], "xbar": "0"},
        {"kind": "full", "p": 2, "N": 1, "n": 1, "polys": ["0,1"], "targets": ["1^1"]},
        {"kind": "lifts", "p": 2, "N": 1, "n": 1, "polys": ["0,1"], "targets": ["1^1"], "xbar": "1"},
    ]}))
    reports = run_sweep(str(config), workers=1, report_dir=str(tmp_path / "out"))
    assert [r.verdict for r in reports] == [VERDICT_EXACT_MATCH, VERDICT_EXACT_MATCH]
    written = sorted(p.name for p in (tmp_path / "out").iterdir())
    assert len(written) == 2
    assert written[0].startswith("tiny_") and written[0].endswith(".csv")
