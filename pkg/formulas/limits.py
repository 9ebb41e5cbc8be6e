"""
Infinite products, truncated with an explicit tail bound.

prod_{i>M} (1 - q^{-i}) lies within sum_{i>M} q^{-i} = q^{-M}/(q - 1) of 1, which is below
q^{-M}/(1 - q^{-1}); M is the least index pushing that bound under the tolerance.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from errors import DomainError
from formulas.counts import _one_minus_product, aut_count_formula
from formulas.instance import ProblemInstance


@dataclass(frozen=True)
class LimitValue:
    value: float
    truncation_index: int

    def to_dict(self) -> dict:
        return {"value": self.value, "truncation_index": self.truncation_index}


def truncation_index(q: int, tol: float) -> int:
    if tol <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    bound = Fraction(tol)
    m = 1
    while Fraction(1, q ** m) / (1 - Fraction(1, q)) >= bound:
        m += 1
    return m


def main_limit(inst: ProblemInstance, tol: float = 1e-12) -> LimitValue:
    """lim_n Prob(cok(P_j(X)) = G_j for all j) = prod_j prod_i (1 - q_j^{-i}) / |Aut(G_j)|."""
    share = tol / len(inst.polys)
    value = Fraction(1)
    index = 0
    for g, q in zip(inst.targets, inst.qs):
        m = truncation_index(q, share)
        index = max(index, m)
        value *= _one_minus_product(q, m) / aut_count_formula(g, q)
    return LimitValue(float(value), index)


def cl_limit(p: int, degs: Sequence[int], ranks: Sequence[int], tol: float = 1e-12) -> LimitValue:
    """
    lim_n Prob(dim cok(P_j(Xbar)) = r_j for all j)
    = prod_j q_j^{-r_j^2} prod_i (1 - q_j^{-i}) / prod_{i<=r_j} (1 - q_j^{-i})^2.
    """
    if len(degs) != len(ranks) or not degs:
        raise DomainError(f"need one rank per degree, got {list(degs)} and {list(ranks)}")
    share = tol / len(degs)
    value = Fraction(1)
    index = 0
    for d, r in zip(degs, ranks):
        q = p ** d
        m = truncation_index(q, share)
        index = max(index, m)
        value *= Fraction(1, q ** (r * r)) * _one_minus_product(q, m) / _one_minus_product(q, r) ** 2
    return LimitValue(float(value), index)


