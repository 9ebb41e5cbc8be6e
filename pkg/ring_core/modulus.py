"""
Prime-power moduli p^k.
"""
from dataclasses import dataclass

from config import MAX_MODULUS
from errors import DomainError


def is_prime(p: int) -> bool:
    """Trial division; p is expected to be small."""
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def p_valuation(n: int, p: int, cap: int) -> int:
    """
    Exponent of p in n, capped at cap (0 has valuation cap).

    Args:
        n (int): any integer.
        p (int): the prime.
        cap (int): value returned for n == 0 and upper bound otherwise.

    Returns:
        int: min(v_p(n), cap).
    """
    if n == 0:
        return cap
    n = abs(n)
    v = 0
    while n % p == 0 and v < cap:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PrimePowerModulus:
    """The modulus of Z/p^k."""
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.k < 1:
            raise DomainError(f"modulus exponent must be >= 1, got {self.k}")
        if self.p ** self.k >= MAX_MODULUS:
            raise DomainError(f"{self.p}^{self.k} does not fit the 2^62 residue bound")

    @property
    def value(self) -> int:
        return self.p ** self.k

    def with_exponent(self, k: int) -> "PrimePowerModulus":
        return PrimePowerModulus(self.p, k)

    def __str__(self):
        return f"Z/{self.p}^{self.k}"
