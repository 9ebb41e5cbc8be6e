"""
Polynomials over F_p and monic integer polynomials that stay irreducible mod p.

Coefficient lists are low-to-high throughout: [a_0, a_1, ..., a_d].
"""
import itertools
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from errors import DomainError
from ring_core.modulus import is_prime


def poly_trim(a: Sequence[int]) -> List[int]:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_mod_p(a: Sequence[int], p: int) -> List[int]:
    return poly_trim([c % p for c in a])


def poly_divmod_p(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    """
    Long division in F_p[t].

    Args:
        a (Sequence[int]): dividend.
        b (Sequence[int]): divisor, nonzero mod p.
        p (int): the prime.

    Returns:
        tuple: (quotient, remainder), both trimmed.
    """
    a = poly_mod_p(a, p)
    b = poly_mod_p(b, p)
    if not b:
        raise DomainError("division by the zero polynomial")
    lead_inv = pow(b[-1], -1, p)
    quotient = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = (a[-1] * lead_inv) % p
        quotient[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a = poly_trim(a)
    return poly_trim(quotient), a


def poly_mul_p(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_sub_p(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return poly_trim([(x - y) % p for x, y in zip(a, b)])


def poly_xgcd_p(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int], List[int]]:
    """
    Extended Euclid in F_p[t].

    Returns:
        tuple: (g, s, t) with s*a + t*b = g and g monic (or zero).
    """
    r0, r1 = poly_mod_p(a, p), poly_mod_p(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = poly_divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub_p(s0, poly_mul_p(q, s1, p), p)
        t0, t1 = t1, poly_sub_p(t0, poly_mul_p(q, t1, p), p)
    if r0:
        inv = pow(r0[-1], -1, p)
        r0 = [(c * inv) % p for c in r0]
        s0 = [(c * inv) % p for c in s0]
        t0 = [(c * inv) % p for c in t0]
    return r0, s0, t0


def iter_monic(p: int, degree: int):
    """Yield every monic polynomial of the given degree over F_p, lexicographically."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def check_irreducible(coefficients: Sequence[int], p: int) -> bool:
    """
    Exhaustive trial factorization of a monic polynomial over F_p.

    Args:
        coefficients (Sequence[int]): a_0..a_d with a_d == 1.
        p (int): the prime.

    Returns:
        bool: True iff P mod p has no monic factor of degree in [1, d/2].
    """
    coefficients = list(coefficients)
    if len(coefficients) < 2:
        raise DomainError("polynomial must have degree >= 1")
    if coefficients[-1] != 1:
        raise DomainError(f"polynomial {coefficients} is not monic")
    d = len(coefficients) - 1
    for degree in range(1, d // 2 + 1):
        for factor in iter_monic(p, degree):
            _, remainder = poly_divmod_p(coefficients, factor, p)
            if not remainder:
                return False
    return True


def find_irreducible(p: int, d: int) -> "PolySpec":
    """First monic irreducible polynomial of degree d over F_p in lexicographic order."""
    for candidate in iter_monic(p, d):
        if check_irreducible(candidate, p):
            return PolySpec(tuple(candidate[:-1]), p)
    raise DomainError(f"no irreducible polynomial of degree {d} over F_{p}")


@dataclass(frozen=True)
class PolySpec:
    """
    A monic integer polynomial t^d + a_{d-1} t^{d-1} + ... + a_0 irreducible mod p.

    coefficients holds a_0..a_{d-1}; the leading 1 is implied.
    """
    coefficients: Tuple[int, ...]
    p: int

    def __post_init__(self):
        if len(self.coefficients) < 1:
            raise DomainError("polynomial must have degree >= 1")
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if not check_irreducible(self.monic_coefficients, self.p):
            raise DomainError(f"{self.pretty()} is reducible mod {self.p}")

    @classmethod
    def from_monic(cls, coefficients: Sequence[int], p: int) -> "PolySpec":
        """Build from a full low-to-high list that ends with the leading 1."""
        coefficients = [int(c) for c in coefficients]
        if len(coefficients) < 2:
            raise DomainError("polynomial must have degree >= 1")
        if coefficients[-1] != 1:
            raise DomainError(f"polynomial {coefficients} is not monic")
        return cls(tuple(coefficients[:-1]), p)

    @classmethod
    def parse(cls, text: str, p: int) -> "PolySpec":
        """Parse "a0,a1,...,1" (negative coefficients allowed)."""
        try:
            coefficients = [int(c) for c in text.replace(" ", "").split(",") if c != ""]
        except ValueError as e:
            raise DomainError(f"bad polynomial literal {text!r}: {e}") from e
        return cls.from_monic(coefficients, p)

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    @property
    def q(self) -> int:
        return self.p ** self.degree

    @property
    def monic_coefficients(self) -> List[int]:
        return list(self.coefficients) + [1]

    def reduced(self, modulus: int) -> Tuple[int, ...]:
        """a_0..a_{d-1} reduced into [0, modulus)."""
        return tuple(c % modulus for c in self.coefficients)

    def residue_key(self) -> Tuple[int, ...]:
        return self.reduced(self.p)

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self.monic_coefficients):
            value = value * x + c
        return value

    def pretty(self) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.monic_coefficients))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms).replace("+-", "-") or "0"

    def __str__(self):
        return ",".join(str(c) for c in self.monic_coefficients)
