"""
A joint counting instance: prime p, polynomials P_j, targets G_j, dimension n, depth N.
"""
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from errors import DomainError, StructuralError
from logger import logger_access
from module_theory import ModuleType
from ring_core import PolySpec, is_prime


@dataclass(frozen=True)
class ProblemInstance:
    p: int
    polys: Tuple[PolySpec, ...]
    targets: Tuple[ModuleType, ...]
    n: int
    N: int
    warnings: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.n < 1 or self.N < 0:
            raise DomainError(f"need n >= 1 and N >= 0, got n={self.n}, N={self.N}")
        if len(self.polys) != len(self.targets):
            raise StructuralError(f"{len(self.polys)} polynomials but {len(self.targets)} targets")
        if not self.polys:
            raise DomainError("at least one polynomial is required")
        keys = set()
        for poly in self.polys:
            if poly.p != self.p:
                raise StructuralError(f"polynomial {poly} is over F_{poly.p}, instance is over F_{self.p}")
            if poly.residue_key() in keys:
                raise DomainError(f"polynomials are not distinct mod {self.p}: {poly} repeats")
            keys.add(poly.residue_key())
        # targets are modules over Z_p[t]/(P_j)
        targets = tuple(g.with_residue_degree(poly.degree) for g, poly in zip(self.targets, self.polys))
        object.__setattr__(self, "targets", targets)
        for j, g in enumerate(targets):
            if not g.annihilated_by(self.N):
                raise DomainError(f"target {j} ({g}) is not killed by p^{self.N}")

        needed = self.residue_dimension()
        if self.n < needed:
            message = (f"n={self.n} < {needed} = sum of dim_F_p(G_j/pG_j): no residue matrix has these "
                       f"ranks, so the count is vacuous while the closed form stays nonzero")
            logger_access.warning(f"⚠️ {message}")
            object.__setattr__(self, "warnings", self.warnings + (message,))

    @classmethod
    def parse(cls, p: int, N: int, n: int, poly_texts: Sequence[str], target_texts: Sequence[str]) -> "ProblemInstance":
        polys = tuple(PolySpec.parse(text, p) for text in poly_texts)
        if len(target_texts) != len(polys):
            raise StructuralError(f"{len(polys)} polynomials but {len(target_texts)} targets")
        targets = tuple(ModuleType.parse(text, poly.degree) for text, poly in zip(target_texts, polys))
        return cls(p, polys, targets, n, N)

    @property
    def degrees(self) -> List[int]:
        return [poly.degree for poly in self.polys]

    @property
    def qs(self) -> List[int]:
        return [poly.q for poly in self.polys]

    @property
    def ranks(self) -> List[int]:
        return [g.residue_rank() for g in self.targets]

    def residue_dimension(self) -> int:
        """sum_j dim_{F_p}(G_j / p G_j)."""
        return sum(d * r for d, r in zip(self.degrees, self.ranks))

    @property
    def dimension_ok(self) -> bool:
        return self.n >= self.residue_dimension()

    def describe(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "N": self.N,
            "polys": [str(poly) for poly in self.polys],
            "targets": [g.format() for g in self.targets],
        }
