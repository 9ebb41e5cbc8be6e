"""
Closed-form counts in exact rational arithmetic.
"""
from fractions import Fraction
from typing import Union

from errors import DomainError, NonIntegralCount
from formulas.instance import ProblemInstance
from module_theory import ModuleType

ExactRational = Fraction
Count = Union[int, ExactRational]


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralCount(f"{what} evaluated to {value}, not an integer")
    return value.numerator


def _one_minus_product(q: int, upto: int, start: int = 1) -> Fraction:
    """prod_{i=start}^{upto} (1 - q^{-i})."""
    out = Fraction(1)
    for i in range(start, upto + 1):
        out *= 1 - Fraction(1, q ** i)
    return out


def gl_order(r: int, q: int) -> int:
    """|GL_r(F_q)| = prod_{i<r} (q^r - q^i)."""
    out = 1
    for i in range(r):
        out *= q ** r - q ** i
    return out


def aut_count_formula(g: ModuleType, q: int) -> int:
    """
    |Aut(G)| = prod_i q^{-r_i^2} |GL_{r_i}(F_q)| * prod_{i,j} q^{min(e_i, e_j) r_i r_j}.
    """
    value = Fraction(1)
    for _, r in g.parts:
        value *= Fraction(gl_order(r, q), q ** (r * r))
    power = sum(min(e_i, e_j) * r_i * r_j for e_i, r_i in g.parts for e_j, r_j in g.parts)
    return _as_integer(value * q ** power, f"|Aut({g})| over F_{q}")


def rank_count_formula(n: int, r: int, q: int) -> int:
    """Number of n x n matrices over F_q of rank r."""
    if not 0 <= r <= n:
        raise DomainError(f"rank {r} outside [0, {n}]")
    value = Fraction(q ** (n * n - (n - r) ** 2))
    value *= _one_minus_product(q, n) * _one_minus_product(q, n, n - r + 1)
    value /= _one_minus_product(q, n - r) * _one_minus_product(q, r)
    return _as_integer(value, f"rank-{r} count for n={n}, q={q}")


def residue_factor(g: ModuleType, q: int) -> Fraction:
    """q^{r^2} prod_{i=1}^{r} (1 - q^{-i})^2 / |Aut(G)| with r the residue rank of G."""
    r = g.residue_rank()
    return Fraction(q ** (r * r)) * _one_minus_product(q, r) ** 2 / aut_count_formula(g, q)


def main3_count(inst: ProblemInstance) -> Count:
    """
    Number of lifts X of a fixed admissible residue matrix with cok(P_j(X)) = G_j for all j.

    Returns:
        int | ExactRational: an int whenever n >= sum_j dim_F_p(G_j/pG_j); otherwise the
        closed form is returned as a fraction and the instance carries a warning.
    """
    value = Fraction(inst.p ** (inst.N * inst.n * inst.n)) * main2_factor(inst)
    if inst.dimension_ok:
        return _as_integer(value, f"lift count for {inst.describe()}")
    return value


def main2_factor(inst: ProblemInstance) -> ExactRational:
    """The constant relating the precision-(N+1) probability to the residue probability."""
    value = Fraction(1)
    for g, q in zip(inst.targets, inst.qs):
        value *= residue_factor(g, q)
    return value


def main2_check_rhs(inst: ProblemInstance, residue_probability: Fraction) -> ExactRational:
    """Predicted probability over Mat_n(Z/p^{N+1}) from an exact residue probability."""
    return main2_factor(inst) * Fraction(residue_probability)


def l1deg1_count(g: ModuleType, q: int, N: int, n: int) -> Count:
    """
    Lifts X over R_{N+1} of a fixed admissible residue matrix with cok(X - alpha I) = G.

    q^{N n^2} q^{r^2} prod_{i<=r}(1 - q^{-i})^2 / |Aut(G)|.
    """
    if not g.annihilated_by(N):
        raise DomainError(f"{g} is not killed by p^{N}")
    value = Fraction(q ** (N * n * n)) * residue_factor(g, q)
    if n >= g.residue_rank():
        return _as_integer(value, f"lift count for {g} over F_{q}, N={N}, n={n}")
    return value


def reduced_block_count(g: ModuleType, q: int, N: int) -> int:
    """
    r x r matrices of the form pA over R/p^{N+1} with cok(pA) = G, r the residue rank of G.

    q^{N r^2 + r^2} prod_{i<=r}(1 - q^{-i})^2 / |Aut(G)|.
    """
    if not g.annihilated_by(N):
        raise DomainError(f"{g} is not killed by p^{N}")
    r = g.residue_rank()
    value = Fraction(q ** (N * r * r)) * residue_factor(g, q)
    return _as_integer(value, f"reduced block count for {g} over F_{q}, N={N}")
