"""
p-valuations of the gcd of i x i minors, computed on the canonical integer lift.

Over the DVR the product of the first i invariant factors equals the gcd of the i x i
minors; the lift avoids zero divisors of Z/p^k.
"""
import itertools
from typing import List, Optional, Sequence, Tuple

from config import MINOR_MAX_DIM
from errors import UnsupportedDimension
from matrix_ops import RingMatrix
from ring_core import p_valuation

Poly = Tuple[int, ...]


def _mul_exact(a: Poly, b: Poly, relation: Optional[Tuple[int, ...]]) -> Poly:
    """Product in Z[t]/(P) without any modular reduction."""
    if relation is None:
        return (a[0] * b[0],)
    d = len(relation)
    buf = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                buf[i + j] += x * y
    for deg in range(2 * d - 2, d - 1, -1):
        c = buf[deg]
        if c:
            for i in range(d):
                buf[deg - d + i] -= c * relation[i]
    return tuple(buf[:d])


def _permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _determinant(entries: List[List[Poly]], relation: Optional[Tuple[int, ...]], d: int) -> Poly:
    """Leibniz expansion; sizes are at most MINOR_MAX_DIM."""
    size = len(entries)
    total = [0] * d
    for perm in itertools.permutations(range(size)):
        term = entries[0][perm[0]]
        for row in range(1, size):
            term = _mul_exact(term, entries[row][perm[row]], relation)
            if not any(term):
                break
        if any(term):
            sign = _permutation_sign(perm)
            total = [t + sign * c for t, c in zip(total, term)]
    return tuple(total)


def minor_gcd_valuations(x: RingMatrix) -> List[int]:
    """
    v_i = least p-valuation over all i x i minors of the canonical lift, capped at k*i.

    Args:
        x (RingMatrix): square matrix, at most MINOR_MAX_DIM rows.

    Returns:
        list: [v_1, ..., v_n].
    """
    n = x.rows
    if not x.is_square or n > MINOR_MAX_DIM:
        raise UnsupportedDimension(f"minor gcd supports square matrices up to {MINOR_MAX_DIM}, got {x.rows}x{x.cols}")
    ring = x.ring
    relation = ring.extension.coefficients if ring.extension is not None and ring.degree > 1 else None
    lifted = [[e.digits for e in x.row(i)] for i in range(n)]
    out = []
    for size in range(1, n + 1):
        cap = ring.k * size
        best = cap
        for rows in itertools.combinations(range(n), size):
            for cols in itertools.combinations(range(n), size):
                det = _determinant([[lifted[r][c] for c in cols] for r in rows], relation, ring.degree)
                v = min(p_valuation(c, ring.p, cap) for c in det)
                best = min(best, v)
                if best == 0:
                    break
            if best == 0:
                break
        out.append(best)
    return out


def minor_identity_holds(exponents: Sequence[int], valuations: Sequence[int], k: int) -> bool:
    """
    d_1 + ... + d_i == v_i while d_i < k, and v_i >= d_1 + ... + d_i once d_i reaches k.
    """
    running = 0
    for d_i, v_i in zip(exponents, valuations):
        running += d_i
        if d_i < k and running != v_i:
            return False
        if d_i >= k and v_i < running:
            return False
    return True
