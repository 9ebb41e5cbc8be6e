"""
Smith normal form over Z/p^k and R_k = (Z/p^k)[t]/(P).

Every element of a chain ring is u * p^v, so the pivot is simply an entry of least
valuation; after unit scaling it equals p^v and every other entry of its row and
column is an exact multiple of it.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

from errors import PrecisionSaturated, StructuralError
from matrix_ops import RingMatrix
from module_theory import ModuleType
from ring_core import ChainRingElement


@dataclass(frozen=True)
class SNFResult:
    """
    Exponents d_1 <= ... <= d_n of the diagonal p^{d_i} (d_i = k encodes 0).

    When transforms were requested, left * X * right is that diagonal exactly.
    """
    exponents: Tuple[int, ...]
    k: int
    left: Optional[RingMatrix] = None
    right: Optional[RingMatrix] = None

    @property
    def saturated(self) -> bool:
        return any(d == self.k for d in self.exponents)

    def to_dict(self, with_transforms: bool = False) -> dict:
        out = {"exponents": list(self.exponents), "saturated": self.saturated}
        if with_transforms and self.left is not None:
            out["left"] = self.left.to_int_rows()
            out["right"] = self.right.to_int_rows()
        return out


def _swap_rows(m: List[List[ChainRingElement]], i: int, j: int):
    if i != j:
        m[i], m[j] = m[j], m[i]


def _swap_cols(m: List[List[ChainRingElement]], i: int, j: int):
    if i != j:
        for row in m:
            row[i], row[j] = row[j], row[i]


def smith_normal_form(x: RingMatrix, with_transforms: bool = False) -> SNFResult:
    """
    Diagonalize x by invertible row and column operations.

    Args:
        x (RingMatrix): square matrix over a chain ring.
        with_transforms (bool, optional): also return left and right. Defaults to False.

    Returns:
        SNFResult: the exponent list, plus transforms on request.
    """
    if not x.is_square:
        raise StructuralError(f"smith_normal_form needs a square matrix, got {x.rows}x{x.cols}")
    ring = x.ring
    n = x.rows
    k = ring.k
    a = x.to_lists()
    left = RingMatrix.identity(ring, n).to_lists() if with_transforms else None
    right = RingMatrix.identity(ring, n).to_lists() if with_transforms else None
    exponents = []

    for s in range(n):
        best, pivot = k, None
        for i in range(s, n):
            for j in range(s, n):
                v = a[i][j].valuation()
                if v < best:
                    best, pivot = v, (i, j)
                    if v == 0:
                        break
            if best == 0:
                break
        if pivot is None:
            exponents.extend([k] * (n - s))
            break

        i, j = pivot
        _swap_rows(a, s, i)
        _swap_cols(a, s, j)
        if with_transforms:
            _swap_rows(left, s, i)
            _swap_cols(right, s, j)

        v = best
        unit_inv = a[s][s].unit_part().inverse()
        a[s] = [unit_inv.mul(e) for e in a[s]]
        if with_transforms:
            left[s] = [unit_inv.mul(e) for e in left[s]]

        # pivot is now p^v exactly
        for r in range(s + 1, n):
            if a[r][s].is_zero():
                continue
            c = a[r][s].divide_by_p_power(v)
            a[r] = [e.sub(c.mul(f)) for e, f in zip(a[r], a[s])]
            if with_transforms:
                left[r] = [e.sub(c.mul(f)) for e, f in zip(left[r], left[s])]

        # column s is now zero below the pivot, so clearing the row only touches row s
        for col in range(s + 1, n):
            if a[s][col].is_zero():
                continue
            if with_transforms:
                c = a[s][col].divide_by_p_power(v)
                for row in right:
                    row[col] = row[col].sub(c.mul(row[s]))
            a[s][col] = ring.zero()
        exponents.append(v)

    if not with_transforms:
        return SNFResult(tuple(exponents), k)
    return SNFResult(tuple(exponents), k, RingMatrix.from_rows(ring, left), RingMatrix.from_rows(ring, right))


def cokernel_type(x: RingMatrix) -> ModuleType:
    """
    Isomorphism class of cok(x) = + S/p^{d_i} S.

    Raises:
        PrecisionSaturated: some d_i equals the modulus exponent k.
    """
    snf = smith_normal_form(x)
    if snf.saturated:
        raise PrecisionSaturated(snf.exponents, snf.k)
    return ModuleType.from_exponents(snf.exponents, x.ring.degree)
