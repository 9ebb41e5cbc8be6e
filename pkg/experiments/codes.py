"""
Kernel-facing packing of polynomials and module types.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from config import KERNEL_MAX_MODULUS, MAX_MODULUS
from errors import DomainError
from module_theory import ModuleType
from ring_core import PolySpec

OVERFLOW = "overflow"
NO_MATCH = -2

JointKey = Union[Tuple[str, ...], str]


def check_kernel_modulus(p: int, k: int):
    if p ** k >= KERNEL_MAX_MODULUS:
        raise DomainError(f"{p}^{k} exceeds the compiled kernel bound 2^31")


def check_code_range(n: int, k: int, polys: int = 1):
    if (k + 1) ** (n * polys) >= MAX_MODULUS:
        raise DomainError(f"exponent codes for n={n}, k={k} and {polys} polynomials overflow 64 bits")


@dataclass(frozen=True)
class PolyPack:
    """Per-polynomial arrays for the kernels at precision k, padded to the largest degree."""
    degs: np.ndarray
    rels: np.ndarray
    relps: np.ndarray
    tbars: np.ndarray
    coeffs: np.ndarray

    @classmethod
    def build(cls, polys: Sequence[PolySpec], p: int, k: int) -> "PolyPack":
        check_kernel_modulus(p, k)
        m = p ** k
        dmax = max(poly.degree for poly in polys)
        l = len(polys)
        degs = np.array([poly.degree for poly in polys], dtype=np.int64)
        rels = np.zeros((l, dmax), dtype=np.int64)
        relps = np.zeros((l, dmax), dtype=np.int64)
        tbars = np.zeros((l, dmax), dtype=np.int64)
        for j, poly in enumerate(polys):
            d = poly.degree
            rels[j, :d] = poly.reduced(m)
            relps[j, :d] = poly.reduced(p)
            if d == 1:
                tbars[j, 0] = (-poly.coefficients[0]) % m
            else:
                tbars[j, 1] = 1
        return cls(degs, rels, relps, tbars, rels.copy())


def exponents_to_code(exps: Sequence[int], k: int) -> int:
    code, scale = 0, 1
    for e in exps:
        code += int(e) * scale
        scale *= k + 1
    return code


def code_to_exponents(code: int, n: int, k: int) -> List[int]:
    out = []
    for _ in range(n):
        out.append(int(code % (k + 1)))
        code //= k + 1
    return out


def target_code(g: ModuleType, n: int, k: int) -> int:
    """Code of the SNF exponent list with cokernel g, NO_MATCH when g needs more than n generators."""
    if g.residue_rank() > n:
        return NO_MATCH
    return exponents_to_code(g.to_exponent_vector(n), k)


def code_to_module(code: int, n: int, k: int, residue_degree: int) -> Optional[ModuleType]:
    """None when the exponent list is saturated."""
    exps = code_to_exponents(code, n, k)
    if k in exps:
        return None
    return ModuleType.from_exponents(exps, residue_degree)


def joint_key(codes: Sequence[int], n: int, k: int, degs: Sequence[int]) -> JointKey:
    parts = []
    for code, d in zip(codes, degs):
        g = code_to_module(int(code), n, k, int(d))
        if g is None:
            return OVERFLOW
        parts.append(g.format())
    return tuple(parts)


def format_key(key: JointKey) -> str:
    return key if isinstance(key, str) else "|".join(key)
