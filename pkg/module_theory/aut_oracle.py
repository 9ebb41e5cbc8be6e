"""
Brute-force automorphism count of a finite module over an unramified DVR.

An endomorphism of G = S/p^{e_1} + ... + S/p^{e_m} (one summand per generator) is a matrix
(c_ab) where c_ab : S/p^{e_b} -> S/p^{e_a} is multiplication by an element of
p^{max(0, e_a - e_b)} S / p^{e_a}; there are q^{sum min(e_a, e_b)} of them. An endomorphism
of a finite module is bijective iff it is injective, iff no nonzero element of the socle
G[p] = {x : p x = 0} maps to zero, so every candidate is evaluated on every nonzero socle
element with real ring arithmetic.
"""
import itertools
from typing import Tuple

import numpy as np
from sympy import factorint

from config import ORACLE_BUDGET_LOG2, ORACLE_MAX_ORDER_LOG2
from errors import BudgetExceeded, DomainError
from logger import logger_access
from module_theory.module_type import ModuleType
from ring_core import RingDescriptor, find_irreducible

CHUNK = 4096


def split_prime_power(q: int) -> Tuple[int, int]:
    """q = p^d via sympy.factorint."""
    factors = factorint(q)
    if q < 2 or len(factors) != 1:
        raise DomainError(f"{q} is not a prime power")
    (p, d), = factors.items()
    return int(p), int(d)


def candidate_count_log2(g: ModuleType, q: int) -> float:
    exps = g.expanded_exponents()
    return sum(min(a, b) for a in exps for b in exps) * np.log2(q)


def _residue_ring(p: int, d: int, precision: int) -> RingDescriptor:
    extension = find_irreducible(p, d) if d > 1 else None
    return RingDescriptor.of(p, precision, extension)


def _pair_table(ring: RingDescriptor, field_elements, e_a: int, e_b: int) -> np.ndarray:
    """
    Images c * p^{e_b - 1} y reduced mod p^{e_a} for every admissible c and every y in F_q.

    Returns:
        np.ndarray: shape (candidates, q, d).
    """
    p = ring.p
    shift = ring.uniformizer_power(max(0, e_a - e_b))
    socle_gen = ring.uniformizer_power(e_b - 1)
    m_a = p ** e_a
    width = p ** min(e_a, e_b)
    rows = []
    for w_digits in itertools.product(range(width), repeat=ring.degree):
        c = shift.mul(ring.element(list(w_digits)))
        rows.append([[x % m_a for x in c.mul(socle_gen).mul(y).digits] for y in field_elements])
    return np.asarray(rows, dtype=np.int64)


def brute_force_aut_count(g: ModuleType, q: int, budget_log2: int = ORACLE_BUDGET_LOG2) -> int:
    """
    Count bijective endomorphisms of g as a module over the unramified DVR with residue field F_q.

    Args:
        g (ModuleType): the module.
        q (int): residue field size p^d.
        budget_log2 (int, optional): log2 bound on the number of endomorphism candidates.

    Returns:
        int: |Aut(g)|.
    """
    p, d = split_prime_power(q)
    order_log2 = g.order_log_q() * np.log2(q)
    if order_log2 > ORACLE_MAX_ORDER_LOG2 + 1e-9:
        raise BudgetExceeded("automorphism oracle (module order)", g.order(q), 1 << ORACLE_MAX_ORDER_LOG2)
    if candidate_count_log2(g, q) > budget_log2 + 1e-9:
        exps = g.expanded_exponents()
        size = q ** sum(min(a, b) for a in exps for b in exps)
        raise BudgetExceeded("automorphism oracle (endomorphism candidates)", size, 1 << budget_log2)
    exps = g.expanded_exponents()
    m = len(exps)
    if m == 0:
        return 1

    ring = _residue_ring(p, d, max(exps))
    field_elements = [ring.element(list(digits)) for digits in itertools.product(range(p), repeat=d)]
    pairs = [(a, b) for a in range(m) for b in range(m)]
    tables = {(a, b): _pair_table(ring, field_elements, exps[a], exps[b]) for a, b in pairs}
    radices = [tables[pair].shape[0] for pair in pairs]
    total = int(np.prod(radices, dtype=np.int64))

    # nonzero socle vectors as indices into field_elements
    socle = np.asarray(list(itertools.product(range(q), repeat=m))[1:], dtype=np.int64)
    moduli = [p ** e for e in exps]

    count = 0
    for start in range(0, total, CHUNK):
        flat = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        digits = np.unravel_index(flat, radices)
        choice = dict(zip(pairs, digits))
        kernel_hit = np.ones((flat.size, socle.shape[0]), dtype=bool)
        for a in range(m):
            acc = np.zeros((flat.size, socle.shape[0], d), dtype=np.int64)
            for b in range(m):
                per_candidate = tables[(a, b)][choice[(a, b)]]
                acc += per_candidate[:, socle[:, b], :]
            kernel_hit &= np.all(acc % moduli[a] == 0, axis=-1)
        count += int(np.count_nonzero(~kernel_hit.any(axis=1)))

    logger_access.debug(f"🔎 aut oracle {g} over F_{q}: {count} of {total} endomorphisms are bijective")
    return count
