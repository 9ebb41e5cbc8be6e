"""
Isomorphism classes of finite modules over a DVR with residue field F_q.

G = (S/p^{e_1})^{r_1} + ... + (S/p^{e_k})^{r_k} is stored as parts ((e_1, r_1), ...)
with e_1 > ... > e_k >= 1 and r_i >= 1; the empty tuple is the trivial module.
residue_degree is deg P (1 for abelian p-groups).
"""
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions

from config import ORACLE_BUDGET_LOG2
from errors import BudgetExceeded, DomainError

Part = Tuple[int, int]


@dataclass(frozen=True)
class ModuleType:
    parts: Tuple[Part, ...] = ()
    residue_degree: int = 1

    def __post_init__(self):
        if self.residue_degree < 1:
            raise DomainError(f"residue degree must be >= 1, got {self.residue_degree}")
        merged = Counter()
        for e, r in self.parts:
            e, r = int(e), int(r)
            if e < 1 or r < 1:
                raise DomainError(f"part {e}^{r} needs exponent and multiplicity >= 1")
            merged[e] += r
        object.__setattr__(self, "parts", tuple(sorted(merged.items(), reverse=True)))

    @classmethod
    def trivial(cls, residue_degree: int = 1) -> "ModuleType":
        return cls((), residue_degree)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int], residue_degree: int = 1) -> "ModuleType":
        """One cyclic summand S/p^e per nonzero e."""
        counts = Counter(int(e) for e in exponents if int(e) != 0)
        return cls(tuple(counts.items()), residue_degree)

    @classmethod
    def parse(cls, text: str, residue_degree: int = 1) -> "ModuleType":
        """
        Parse "e1^r1,e2^r2,..." ("2^1,1^2"); "0" or "" is the trivial module and a bare "e" means e^1.
        """
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls.trivial(residue_degree)
        parts = []
        for token in text.split(","):
            e, _, r = token.partition("^")
            try:
                parts.append((int(e), int(r) if r else 1))
            except ValueError as err:
                raise DomainError(f"bad module type literal {text!r}") from err
        return cls(tuple(parts), residue_degree)

    def format(self) -> str:
        if not self.parts:
            return "0"
        return ",".join(f"{e}^{r}" for e, r in self.parts)

    def __str__(self):
        return self.format()

    @property
    def is_trivial(self) -> bool:
        return not self.parts

    def residue_rank(self) -> int:
        return sum(r for _, r in self.parts)

    def order_log_q(self) -> int:
        return sum(e * r for e, r in self.parts)

    def order(self, q: int) -> int:
        return q ** self.order_log_q()

    def exponent(self) -> int:
        return self.parts[0][0] if self.parts else 0

    def annihilated_by(self, n: int) -> bool:
        """True iff p^n G = 0."""
        return self.exponent() <= n

    def quotient_mod_p(self) -> "ModuleType":
        if not self.parts:
            return self
        return ModuleType(((1, self.residue_rank()),), self.residue_degree)

    def expanded_exponents(self) -> List[int]:
        """Exponent of every cyclic summand, largest first."""
        return [e for e, r in self.parts for _ in range(r)]

    def to_exponent_vector(self, n: int) -> List[int]:
        """Nondecreasing SNF exponent list of length n with this cokernel."""
        if self.residue_rank() > n:
            raise DomainError(f"{self} needs {self.residue_rank()} generators, more than n={n}")
        exps = sorted(self.expanded_exponents())
        return [0] * (n - len(exps)) + exps

    def with_residue_degree(self, residue_degree: int) -> "ModuleType":
        return ModuleType(self.parts, residue_degree)


@dataclass(frozen=True)
class RankVector:
    """Residue ranks r_{q_j}(G_j), one per polynomial."""
    ranks: Tuple[int, ...]

    @classmethod
    def from_targets(cls, targets: Sequence[ModuleType]) -> "RankVector":
        return cls(tuple(g.residue_rank() for g in targets))

    def __iter__(self):
        return iter(self.ranks)

    def __len__(self):
        return len(self.ranks)


def residue_rank(g: ModuleType) -> int:
    return g.residue_rank()


def order_log_q(g: ModuleType) -> int:
    return g.order_log_q()


def exponent(g: ModuleType) -> int:
    return g.exponent()


def annihilated_by(g: ModuleType, n: int) -> bool:
    return g.annihilated_by(n)


def quotient_mod_p(g: ModuleType) -> ModuleType:
    return g.quotient_mod_p()


def enumerate_module_types(max_order_log_q: int,
                           residue_degree: int = 1,
                           max_exponent: Optional[int] = None,
                           rank: Optional[int] = None) -> Iterator[ModuleType]:
    """
    Every canonical module type with order_log_q <= max_order_log_q.

    Args:
        max_order_log_q (int): bound on log_q |G|.
        residue_degree (int, optional): attached to every result. Defaults to 1.
        max_exponent (int, optional): keep only types with p^max_exponent G = 0.
        rank (int, optional): keep only types of this residue rank.

    Yields:
        ModuleType: ordered by order, then by sympy's partition order.
    """
    for m in range(max_order_log_q + 1):
        if m == 0:
            candidates = [{}]
        else:
            candidates = (dict(part) for part in partitions(m, k=max_exponent))
        for part in candidates:
            g = ModuleType(tuple(part.items()), residue_degree)
            if rank is not None and g.residue_rank() != rank:
                continue
            yield g


def brute_force_element_count(g: ModuleType, q: int, budget_log2: int = ORACLE_BUDGET_LOG2) -> int:
    """Count the tuples (x_1, ..., x_m), x_i in S/p^{e_i}, one by one."""
    size = g.order(q)
    if size > (1 << budget_log2):
        raise BudgetExceeded("element enumeration", size, 1 << budget_log2)
    ranges = [range(q ** e) for e in g.expanded_exponents()]
    return sum(1 for _ in itertools.product(*ranges))
