"""
Exhaustive engines: lifts of a residue matrix, all matrices mod p^{N+1}, residue censuses.

Lifts are X = Xbar + p A with the digits of A decoded from a flat index (odometer order),
split into fixed chunks and counted by the compiled kernels.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from constants import get_constants
from errors import BudgetExceeded, DomainError, RankHypothesisError, StructuralError
from experiments import kernels
from experiments.codes import (JointKey, PolyPack, check_code_range, code_to_exponents,
                               joint_key, target_code)
from experiments.parallel import chunk_ranges, run_chunks
from logger import logger_experiment
from matrix_ops import RingMatrix, mat_scale, reduce_mod
from module_theory import ModuleType
from normal_form import lee_snf, smith_normal_form
from ring_core import ChainRingElement, PolySpec, RingDescriptor


@dataclass(frozen=True)
class FullEnumeration:
    count: int
    total: int
    residue_count: int
    residue_total: int

    def to_dict(self) -> dict:
        return {"count": self.count, "total": self.total,
                "residue_count": self.residue_count, "residue_total": self.residue_total}


def _budget(kind: str, override: Optional[int]) -> int:
    if override is not None:
        return override
    params = get_constants()
    return params["LIFT_BUDGET_LOG2"] if kind == "lift" else params["FULL_BUDGET_LOG2"]


def check_budget(what: str, size: int, budget_log2: int):
    if size > (1 << budget_log2):
        raise BudgetExceeded(what, size, 1 << budget_log2)


def decode_digits(start: int, stop: int, count: int, radix: int) -> np.ndarray:
    """Mixed-radix digits (least significant first) of every index in [start, stop)."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, count), dtype=np.int64)
    for e in range(count):
        out[:, e] = idx % radix
        idx //= radix
    return out


def lift_batch(base: np.ndarray, p: int, N: int, start: int, stop: int) -> np.ndarray:
    """Lifts base + p A for A with digits in [0, p^N), shaped like base with a leading batch axis."""
    digits = decode_digits(start, stop, base.size, p ** N)
    flat = (base.reshape(-1)[None, :] + p * digits) % (p ** (N + 1))
    return flat.reshape((stop - start,) + base.shape)


def full_batch(n: int, m: int, start: int, stop: int) -> np.ndarray:
    return decode_digits(start, stop, n * n, m).reshape(stop - start, n, n)


def _residue_array(xbar: RingMatrix) -> np.ndarray:
    if xbar.ring.k != 1:
        xbar = reduce_mod(xbar, 1)
    return xbar.to_array()


def residue_coranks(xbar: RingMatrix, polys: Sequence[PolySpec]) -> List[int]:
    """dim over F_{q_j} of cok(P_j(Xbar)) for each j, via SNF of Xbar - t I over F_{q_j}."""
    if xbar.ring.extension is not None:
        raise StructuralError(f"residue matrix must be over F_p, got {xbar.ring}")
    if xbar.ring.k != 1:
        xbar = reduce_mod(xbar, 1)
    return [sum(1 for e in lee_snf(xbar, poly).exponents if e >= 1) for poly in polys]


def check_rank_hypothesis(xbar: RingMatrix, polys: Sequence[PolySpec], targets: Sequence[ModuleType]):
    observed = residue_coranks(xbar, polys)
    mismatches = [{"index": j, "observed": o, "expected": g.residue_rank()}
                  for j, (o, g) in enumerate(zip(observed, targets)) if o != g.residue_rank()]
    if mismatches:
        raise RankHypothesisError(mismatches)


def check_targets_killed(targets: Sequence[ModuleType], N: int):
    # a target of exponent N+1 would share the code of a saturated cokernel
    for j, g in enumerate(targets):
        if not g.annihilated_by(N):
            raise DomainError(f"target {j} ({g}) is not killed by p^{N}")


# chunk workers: top-level so the pool can pickle them

def _match_task(task) -> int:
    batch_fn, batch_args, p, k, pack, targets = task
    mats = batch_fn(*batch_args)
    codes = np.empty((mats.shape[0], pack.degs.size), dtype=np.int64)
    kernels.lee_joint_codes(mats, p, k, pack.rels, pack.relps, pack.tbars, pack.degs, targets, True, codes)
    return int(np.count_nonzero(np.all(codes == targets[None, :], axis=1)))


def _histogram_task(task) -> Dict[Tuple[int, ...], int]:
    batch_fn, batch_args, p, k, pack = task
    mats = batch_fn(*batch_args)
    codes = np.empty((mats.shape[0], pack.degs.size), dtype=np.int64)
    dummy = np.zeros(pack.degs.size, dtype=np.int64)
    kernels.lee_joint_codes(mats, p, k, pack.rels, pack.relps, pack.tbars, pack.degs, dummy, False, codes)
    rows, counts = np.unique(codes, axis=0, return_counts=True)
    return {tuple(int(x) for x in row): int(c) for row, c in zip(rows, counts)}


def _merge(parts: Sequence[Dict]) -> Counter:
    total = Counter()
    for part in parts:
        total.update(part)
    return total


def _target_codes(targets: Sequence[ModuleType], n: int, k: int) -> np.ndarray:
    return np.array([target_code(g, n, k) for g in targets], dtype=np.int64)


def enumerate_lifts(xbar: RingMatrix,
                    p: int,
                    N: int,
                    polys: Sequence[PolySpec],
                    targets: Sequence[ModuleType],
                    workers: Optional[int] = None,
                    budget_log2: Optional[int] = None) -> int:
    """
    Number of lifts X of xbar to Z/p^{N+1} with cok(P_j(X)) = G_j (as R_j-modules) for all j.

    Args:
        xbar (RingMatrix): n x n residue matrix over F_p with the targets' residue ranks.
        p (int): the prime.
        N (int): targets are killed by p^N; lifts live mod p^{N+1}.
        polys (Sequence[PolySpec]): the polynomials P_j.
        targets (Sequence[ModuleType]): the modules G_j.
        workers (int, optional): process count.
        budget_log2 (int, optional): overrides the lift budget.

    Returns:
        int: the count; saturated cokernels never match.
    """
    if len(polys) != len(targets):
        raise StructuralError(f"{len(polys)} polynomials but {len(targets)} targets")
    n = xbar.rows
    k = N + 1
    check_targets_killed(targets, N)
    check_rank_hypothesis(xbar, polys, targets)
    size = p ** (N * n * n)
    check_budget("lift enumeration", size, _budget("lift", budget_log2))
    check_code_range(n, k)
    pack = PolyPack.build(polys, p, k)
    base = _residue_array(xbar)[:, :, 0]
    targets = [g.with_residue_degree(poly.degree) for g, poly in zip(targets, polys)]
    codes = _target_codes(targets, n, k)
    logger_experiment.info(f"🔢 enumerate_lifts p={p} N={N} n={n} polys={[str(x) for x in polys]} "
                           f"targets={[str(g) for g in targets]} lifts={size}")
    tasks = [(lift_batch, (base, p, N, a, b), p, k, pack, codes) for a, b in chunk_ranges(size)]
    count = sum(run_chunks(_match_task, tasks, workers, "enumerate_lifts"))
    logger_experiment.info(f"🔢 enumerate_lifts -> {count} of {size}")
    return count


def lift_histogram(xbar: RingMatrix,
                   p: int,
                   N: int,
                   polys: Sequence[PolySpec],
                   workers: Optional[int] = None,
                   budget_log2: Optional[int] = None) -> Dict[JointKey, int]:
    """Joint cokernel types of every lift of xbar; saturated tuples land in OVERFLOW."""
    n = xbar.rows
    k = N + 1
    size = p ** (N * n * n)
    check_budget("lift histogram", size, _budget("lift", budget_log2))
    check_code_range(n, k)
    pack = PolyPack.build(polys, p, k)
    base = _residue_array(xbar)[:, :, 0]
    tasks = [(lift_batch, (base, p, N, a, b), p, k, pack) for a, b in chunk_ranges(size)]
    merged = _merge(run_chunks(_histogram_task, tasks, workers, "lift_histogram"))
    return _keyed(merged, n, k, pack)


def _keyed(merged: Counter, n: int, k: int, pack: PolyPack) -> Dict[JointKey, int]:
    out = Counter()
    for codes, count in merged.items():
        out[joint_key(codes, n, k, pack.degs.tolist())] += count
    return dict(out)


def enumerate_full(p: int,
                   n: int,
                   N: int,
                   polys: Sequence[PolySpec],
                   targets: Sequence[ModuleType],
                   workers: Optional[int] = None,
                   budget_log2: Optional[int] = None) -> FullEnumeration:
    """
    Joint matches over all of Mat_n(Z/p^{N+1}), plus the residue-level count
    #{Xbar : cok(P_j(Xbar)) = G_j / p G_j for all j} over Mat_n(F_p).
    """
    if len(polys) != len(targets):
        raise StructuralError(f"{len(polys)} polynomials but {len(targets)} targets")
    k = N + 1
    m = p ** k
    check_targets_killed(targets, N)
    total = m ** (n * n)
    check_budget("full enumeration", total, _budget("full", budget_log2))
    check_code_range(n, k)
    targets = [g.with_residue_degree(poly.degree) for g, poly in zip(targets, polys)]
    logger_experiment.info(f"🔢 enumerate_full p={p} N={N} n={n} polys={[str(x) for x in polys]} "
                           f"targets={[str(g) for g in targets]} matrices={total}")

    pack = PolyPack.build(polys, p, k)
    codes = _target_codes(targets, n, k)
    tasks = [(full_batch, (n, m, a, b), p, k, pack, codes) for a, b in chunk_ranges(total)]
    count = sum(run_chunks(_match_task, tasks, workers, "enumerate_full"))

    residue_total = p ** (n * n)
    residue_pack = PolyPack.build(polys, p, 1)
    residue_codes = _target_codes([g.quotient_mod_p() for g in targets], n, 1)
    tasks = [(full_batch, (n, p, a, b), p, 1, residue_pack, residue_codes) for a, b in chunk_ranges(residue_total)]
    residue_count = sum(run_chunks(_match_task, tasks, workers, "enumerate_full residue"))

    logger_experiment.info(f"🔢 enumerate_full -> {count}/{total}, residue {residue_count}/{residue_total}")
    return FullEnumeration(count, total, residue_count, residue_total)


def full_histogram(p: int, n: int, N: int, polys: Sequence[PolySpec],
                   workers: Optional[int] = None, budget_log2: Optional[int] = None) -> Dict[JointKey, int]:
    """Exact joint distribution (as counts) over all of Mat_n(Z/p^{N+1})."""
    k = N + 1
    m = p ** k
    total = m ** (n * n)
    check_budget("full histogram", total, _budget("full", budget_log2))
    check_code_range(n, k)
    pack = PolyPack.build(polys, p, k)
    tasks = [(full_batch, (n, m, a, b), p, k, pack) for a, b in chunk_ranges(total)]
    return _keyed(_merge(run_chunks(_histogram_task, tasks, workers, "full_histogram")), n, k, pack)


def residue_rank_census(p: int, n: int, polys: Sequence[PolySpec],
                        workers: Optional[int] = None,
                        budget_log2: Optional[int] = None) -> Dict[Tuple[int, ...], int]:
    """Exact joint census of (dim_{F_{q_j}} cok(P_j(Xbar)))_j over all Xbar in Mat_n(F_p)."""
    total = p ** (n * n)
    check_budget("residue census", total, _budget("full", budget_log2))
    pack = PolyPack.build(polys, p, 1)
    tasks = [(full_batch, (n, p, a, b), p, 1, pack) for a, b in chunk_ranges(total)]
    merged = _merge(run_chunks(_histogram_task, tasks, workers, "residue_rank_census"))
    census = Counter()
    for codes, count in merged.items():
        # at precision 1 every nonzero exponent is 1
        census[tuple(sum(code_to_exponents(c, n, 1)) for c in codes)] += count
    return dict(census)


def admissible_residues(p: int, n: int, polys: Sequence[PolySpec], ranks: Sequence[int],
                        budget_log2: Optional[int] = None) -> List[RingMatrix]:
    """Every Xbar in Mat_n(F_p) with dim_{F_{q_j}} cok(P_j(Xbar)) = ranks[j], in index order."""
    total = p ** (n * n)
    check_budget("residue scan", total, _budget("full", budget_log2))
    pack = PolyPack.build(polys, p, 1)
    wanted = np.array([target_code(ModuleType(((1, r),)) if r else ModuleType(), n, 1) for r in ranks],
                      dtype=np.int64)
    ring = RingDescriptor.of(p, 1)
    out = []
    for a, b in chunk_ranges(total):
        mats = full_batch(n, p, a, b)
        codes = np.empty((mats.shape[0], len(polys)), dtype=np.int64)
        kernels.lee_joint_codes(mats, p, 1, pack.rels, pack.relps, pack.tbars, pack.degs, wanted, True, codes)
        for i in np.flatnonzero(np.all(codes == wanted[None, :], axis=1)):
            out.append(RingMatrix.from_array(ring, mats[i]))
    return out


def _shifted_match_task(task) -> int:
    batch_fn, batch_args, p, k, rel, relp, shift, code = task
    mats = batch_fn(*batch_args)
    codes = np.empty(mats.shape[0], dtype=np.int64)
    kernels.shifted_ring_codes(mats, p, k, rel, relp, shift, codes)
    return int(np.count_nonzero(codes == code))


def enumerate_l1deg1_lifts(g: ModuleType,
                           poly: PolySpec,
                           N: int,
                           n: int,
                           xbar: RingMatrix,
                           alpha: Optional[ChainRingElement] = None,
                           workers: Optional[int] = None,
                           budget_log2: Optional[int] = None) -> int:
    """
    Lifts X over R_{N+1} = (Z/p^{N+1})[t]/(P) of xbar (over F_q) with cok(X - alpha I) = G.

    alpha defaults to 0; the rank hypothesis is corank_{F_q}(xbar - alpha) = r_q(G).
    """
    p = poly.p
    k = N + 1
    ring = RingDescriptor.of(p, k, poly)
    residue_ring = ring.residue_field
    if xbar.ring != residue_ring or xbar.rows != n or xbar.cols != n:
        raise StructuralError(f"residue matrix must be {n}x{n} over {residue_ring}, got {xbar.rows}x{xbar.cols} over {xbar.ring}")
    alpha = ring.zero() if alpha is None else alpha
    if alpha.ring != ring:
        raise StructuralError(f"alpha lives in {alpha.ring}, expected {ring}")
    if not g.annihilated_by(N):
        raise DomainError(f"{g} is not killed by p^{N}")
    g = g.with_residue_degree(poly.degree)

    shifted = xbar - mat_scale(alpha.reduce_mod(1), RingMatrix.identity(residue_ring, n))
    corank = sum(1 for e in smith_normal_form(shifted).exponents if e >= 1)
    if corank != g.residue_rank():
        raise RankHypothesisError([{"index": 0, "observed": corank, "expected": g.residue_rank()}])

    d = poly.degree
    size = p ** (N * n * n * d)
    check_budget("ring lift enumeration", size, _budget("lift", budget_log2))
    check_code_range(n, k)
    pack = PolyPack.build([poly], p, k)
    shift = np.array(alpha.digits, dtype=np.int64)
    code = target_code(g, n, k)
    base = xbar.to_array()
    logger_experiment.info(f"🔢 enumerate_l1deg1_lifts G={g} P={poly} N={N} n={n} lifts={size}")
    tasks = [(lift_batch, (base, p, N, a, b), p, k, pack.rels[0], pack.relps[0], shift, code)
             for a, b in chunk_ranges(size)]
    return sum(run_chunks(_shifted_match_task, tasks, workers, "enumerate_l1deg1_lifts"))


def reduced_block_batch(r: int, p: int, N: int, start: int, stop: int) -> np.ndarray:
    digits = decode_digits(start, stop, r * r, p ** N)
    return (p * digits).reshape(stop - start, r, r, 1)


def enumerate_reduced_block(g: ModuleType, p: int, N: int, r: int,
                            workers: Optional[int] = None,
                            budget_log2: Optional[int] = None) -> int:
    """r x r matrices pA over Z/p^{N+1} (A mod p^N) with cok(pA) = G."""
    check_targets_killed([g], N)
    k = N + 1
    size = p ** (N * r * r)
    check_budget("reduced block enumeration", size, _budget("lift", budget_log2))
    check_code_range(r, k)
    code = target_code(g, r, k)
    zero = np.zeros(1, dtype=np.int64)
    tasks = [(reduced_block_batch, (r, p, N, a, b), p, k, zero, zero, zero, code) for a, b in chunk_ranges(size)]
    return sum(run_chunks(_shifted_match_task, tasks, workers, "enumerate_reduced_block"))


def slice_batch(mats: np.ndarray, start: int, stop: int) -> np.ndarray:
    return mats[start:stop]


def _transport_task(task) -> Dict[Tuple[int, int], int]:
    batch_fn, batch_args, p, k, pack = task
    mats = batch_fn(*batch_args)
    lee = np.empty((mats.shape[0], 1), dtype=np.int64)
    group = np.empty((mats.shape[0], 1), dtype=np.int64)
    dummy = np.zeros(1, dtype=np.int64)
    kernels.lee_joint_codes(mats, p, k, pack.rels, pack.relps, pack.tbars, pack.degs, dummy, False, lee)
    kernels.group_codes(mats, p, k, pack.coeffs, pack.degs, group)
    pairs, counts = np.unique(np.concatenate([lee, group], axis=1), axis=0, return_counts=True)
    return {(int(a), int(b)): int(c) for (a, b), c in zip(pairs, counts)}


def transport_agrees(lee_code: int, group_code: int, n: int, k: int, d: int) -> bool:
    """Each R-summand R/p^e is d copies of Z/p^e; compare exponent multisets."""
    lee_exps = [e for e in code_to_exponents(lee_code, n, k) if e]
    expanded = [e for e in lee_exps for _ in range(d)]
    if len(expanded) > n:
        return False
    return sorted([0] * (n - len(expanded)) + expanded) == code_to_exponents(group_code, n, k)


def lee_transport_check(p: int, n: int, k: int, poly: PolySpec,
                        mats: Optional[np.ndarray] = None,
                        workers: Optional[int] = None,
                        budget_log2: Optional[int] = None) -> Tuple[int, int]:
    """
    Compare the R-side and group-side cokernels on mats (all of Mat_n(Z/p^k) when None).

    Returns:
        tuple: (agreeing, total).
    """
    check_code_range(n, k)
    pack = PolyPack.build([poly], p, k)
    if mats is None:
        total = (p ** k) ** (n * n)
        check_budget("transport check", total, _budget("full", budget_log2))
        tasks = [(full_batch, (n, p ** k, a, b), p, k, pack) for a, b in chunk_ranges(total)]
    else:
        mats = np.asarray(mats, dtype=np.int64) % (p ** k)
        tasks = [(slice_batch, (mats[a:b], 0, b - a), p, k, pack) for a, b in chunk_ranges(mats.shape[0])]
    merged = _merge(run_chunks(_transport_task, tasks, workers, "lee_transport_check"))
    agreeing = sum(c for (a, b), c in merged.items() if transport_agrees(a, b, n, k, poly.degree))
    total = sum(merged.values())
    logger_experiment.info(f"🔁 transport check p={p} n={n} k={k} P={poly}: {agreeing}/{total} agree")
    return agreeing, total

