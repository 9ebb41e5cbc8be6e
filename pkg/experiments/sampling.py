"""
Monte Carlo estimate of the joint cokernel distribution of uniform matrices mod p^{N+1}.

Samples are cut into blocks of SAMPLE_BLOCK_SIZE. Block b draws from a Philox generator
keyed by the seed with counter word 2 set to b, so every sample is fixed by (seed, index)
and the table does not depend on how blocks are spread over workers.
"""
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence

import numpy as np
from scipy import stats

from config import SAMPLE_BLOCK_SIZE
from errors import DomainError
from experiments import kernels
from experiments.codes import OVERFLOW, JointKey, PolyPack, check_code_range, format_key, joint_key
from experiments.parallel import run_chunks
from logger import logger_experiment
from ring_core import PolySpec


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    samples: int = 10 ** 6
    workers: Optional[int] = None
    block_size: int = SAMPLE_BLOCK_SIZE

    def __post_init__(self):
        if self.samples < 1 or self.block_size < 1:
            raise DomainError(f"need positive samples and block size, got {self.samples}, {self.block_size}")
        if not 0 <= self.seed < 1 << 64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


@dataclass
class SampleTable:
    """Counts of joint cokernel types; OVERFLOW collects tuples with a saturated component."""
    counts: Dict[JointKey, int] = field(default_factory=dict)
    samples: int = 0
    seed: int = 0

    def frequency(self, key: JointKey) -> float:
        return self.counts.get(key, 0) / self.samples if self.samples else 0.0

    def to_dict(self) -> dict:
        return {"samples": self.samples, "seed": self.seed,
                "counts": {format_key(k): v for k, v in sorted(self.counts.items(), key=lambda kv: -kv[1])}}


def block_generator(seed: int, block: int) -> np.random.Generator:
    counter = np.array([0, 0, block, 0], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=seed, counter=counter))


def draw_block(seed: int, block: int, count: int, n: int, modulus: int) -> np.ndarray:
    return block_generator(seed, block).integers(0, modulus, size=(count, n, n), dtype=np.int64)


def _sample_task(task) -> Dict[tuple, int]:
    seed, block, count, n, p, k, pack = task
    mats = draw_block(seed, block, count, n, p ** k)
    codes = np.empty((count, pack.degs.size), dtype=np.int64)
    dummy = np.zeros(pack.degs.size, dtype=np.int64)
    kernels.lee_joint_codes(mats, p, k, pack.rels, pack.relps, pack.tbars, pack.degs, dummy, False, codes)
    rows, counts = np.unique(codes, axis=0, return_counts=True)
    return {tuple(int(x) for x in row): int(c) for row, c in zip(rows, counts)}


def sample_joint_distribution(p: int, n: int, N: int, polys: Sequence[PolySpec], cfg: SamplerConfig) -> SampleTable:
    """
    Sample cfg.samples uniform X in Mat_n(Z/p^{N+1}) and tabulate (cok(P_j(X)))_j.

    Returns:
        SampleTable: deterministic in cfg.seed; counts sum to cfg.samples.
    """
    k = N + 1
    check_code_range(n, k)
    pack = PolyPack.build(polys, p, k)
    blocks = -(-cfg.samples // cfg.block_size)
    tasks = []
    for b in range(blocks):
        count = min(cfg.block_size, cfg.samples - b * cfg.block_size)
        tasks.append((cfg.seed, b, count, n, p, k, pack))
    logger_experiment.info(f"🎲 sampling p={p} n={n} N={N} polys={[str(x) for x in polys]} "
                           f"samples={cfg.samples} seed={cfg.seed} blocks={blocks}")
    merged = Counter()
    for part in run_chunks(_sample_task, tasks, cfg.workers, "sample_joint_distribution"):
        merged.update(part)
    table = Counter()
    degs = pack.degs.tolist()
    for codes, count in merged.items():
        table[joint_key(codes, n, k, degs)] += count
    logger_experiment.info(f"🎲 sampling done: {len(table)} distinct joint types, "
                           f"overflow {table.get(OVERFLOW, 0)}")
    return SampleTable(dict(table), cfg.samples, cfg.seed)


def compare_to_exact(table: SampleTable, exact_probabilities: Mapping[JointKey, Fraction]) -> dict:
    """
    Chi-square goodness of fit of a sampled table against exact probabilities.

    Keys missing from exact_probabilities are pooled into one remainder bin; bins whose
    expected count is zero are dropped.

    Returns:
        dict: statistic, p_value, degrees of freedom and the bins used.
    """
    keys = [key for key, prob in exact_probabilities.items() if prob > 0]
    observed = [table.counts.get(key, 0) for key in keys]
    expected = [float(exact_probabilities[key]) * table.samples for key in keys]
    rest_prob = 1 - sum(Fraction(exact_probabilities[key]) for key in keys)
    rest_obs = table.samples - sum(observed)
    if rest_prob > 0:
        observed.append(rest_obs)
        expected.append(float(rest_prob) * table.samples)
    elif rest_obs:
        return {"statistic": float("inf"), "p_value": 0.0, "dof": len(keys) - 1, "bins": len(keys)}
    # scipy requires equal totals to float precision
    scale = sum(observed) / sum(expected)
    expected = [e * scale for e in expected]
    result = stats.chisquare(observed, expected)
    return {"statistic": float(result.statistic), "p_value": float(result.pvalue),
            "dof": len(observed) - 1, "bins": len(observed)}
