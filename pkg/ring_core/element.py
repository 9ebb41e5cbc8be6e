"""
Elements of the chain rings Z/p^k and R_k = (Z/p^k)[t]/(P(t)).

An element is a tuple of d residues in [0, p^k): the coefficients of 1, t, ..., t^{d-1}.
Z/p^k is the d = 1 case with no relation polynomial. Because every supported ring is
unramified, the uniformizer is p and the valuation of an element is the least p-adic
valuation among its coefficients.
"""
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence, Tuple, Union

from errors import DomainError, StructuralError
from ring_core.modulus import PrimePowerModulus, p_valuation
from ring_core.polynomial import PolySpec, poly_xgcd_p

Digits = Tuple[int, ...]


def mul_digits(a: Digits, b: Digits, relation: Optional[Digits], m: int) -> Digits:
    """
    Multiply two digit tuples and reduce mod m and mod the relation polynomial.

    Args:
        a (Digits): first factor.
        b (Digits): second factor.
        relation (Digits | None): a_0..a_{d-1} of the monic relation, None for Z/p^k.
        m (int): p^k.

    Returns:
        Digits: canonical product.
    """
    if relation is None:
        return ((a[0] * b[0]) % m,)
    d = len(relation)
    buf = [0] * (2 * d - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                buf[i + j] += x * y
    # t^d = -(a_0 + a_1 t + ... + a_{d-1} t^{d-1})
    for deg in range(2 * d - 2, d - 1, -1):
        c = buf[deg] % m
        if c:
            for i in range(d):
                buf[deg - d + i] -= c * relation[i]
    return tuple(x % m for x in buf[:d])


@dataclass(frozen=True)
class RingDescriptor:
    """Z/p^k (extension None) or (Z/p^k)[t]/(P(t)) with P irreducible mod p."""
    modulus: PrimePowerModulus
    extension: Optional[PolySpec] = None

    def __post_init__(self):
        if self.extension is not None and self.extension.p != self.modulus.p:
            raise StructuralError(f"polynomial over F_{self.extension.p} attached to {self.modulus}")

    @classmethod
    def of(cls, p: int, k: int, extension: Optional[PolySpec] = None) -> "RingDescriptor":
        return cls(PrimePowerModulus(p, k), extension)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def k(self) -> int:
        return self.modulus.k

    @property
    def value(self) -> int:
        return self.modulus.value

    @property
    def degree(self) -> int:
        return 1 if self.extension is None else self.extension.degree

    @property
    def q(self) -> int:
        """Size of the residue field."""
        return self.p ** self.degree

    @cached_property
    def relation(self) -> Optional[Digits]:
        if self.extension is None:
            return None
        return self.extension.reduced(self.value)

    def with_exponent(self, k: int) -> "RingDescriptor":
        return RingDescriptor(self.modulus.with_exponent(k), self.extension)

    @property
    def residue_field(self) -> "RingDescriptor":
        return self.with_exponent(1)

    def element(self, digits: Union[int, Sequence[int]]) -> "ChainRingElement":
        """Build an element from an integer or a coefficient list, reducing into canonical range."""
        if isinstance(digits, int):
            digits = [digits]
        digits = list(digits)
        if len(digits) > self.degree:
            raise StructuralError(f"{len(digits)} coefficients for a ring of degree {self.degree}")
        digits = digits + [0] * (self.degree - len(digits))
        return ChainRingElement(self, tuple(int(c) % self.value for c in digits))

    def from_int(self, n: int) -> "ChainRingElement":
        return self.element([n])

    def zero(self) -> "ChainRingElement":
        return self.element([0])

    def one(self) -> "ChainRingElement":
        return self.element([1])

    def generator(self) -> "ChainRingElement":
        """The class of t. In Z/p^k this is the root -a_0 when a linear P is attached, else an error."""
        if self.extension is None:
            raise StructuralError(f"{self} has no polynomial generator")
        if self.degree == 1:
            return self.from_int(-self.extension.coefficients[0])
        return self.element([0, 1])

    def uniformizer_power(self, v: int) -> "ChainRingElement":
        return self.from_int(self.p ** v)

    def elements(self) -> Iterator["ChainRingElement"]:
        """Every element of the ring; only sensible for tiny rings."""
        for digits in itertools.product(range(self.value), repeat=self.degree):
            yield ChainRingElement(self, tuple(digits))

    def random_element(self, rng) -> "ChainRingElement":
        """Uniform element drawn from a numpy Generator."""
        return self.element([int(x) for x in rng.integers(0, self.value, size=self.degree)])

    def parse_element(self, text: str) -> "ChainRingElement":
        """
        Parse "c0+c1*t+c2*t^2" (terms in any order, '-' allowed).
        """
        text = text.replace(" ", "").replace("-", "+-")
        digits = [0] * self.degree
        for term in filter(None, text.split("+")):
            coeff, _, power = term.partition("t")
            coeff = coeff.rstrip("*")
            if "t" not in term:
                exp = 0
            else:
                exp = int(power.lstrip("^")) if power else 1
            if coeff in ("", "+"):
                c = 1
            elif coeff == "-":
                c = -1
            else:
                c = int(coeff)
            if exp >= self.degree:
                raise DomainError(f"term {term!r} exceeds degree {self.degree - 1}")
            digits[exp] += c
        return self.element(digits)

    def __str__(self):
        if self.extension is None:
            return f"Z/{self.value}"
        return f"(Z/{self.value})[t]/({self.extension.pretty()})"


@dataclass(frozen=True)
class ChainRingElement:
    """An immutable element of a chain ring."""
    ring: RingDescriptor
    digits: Digits

    def __post_init__(self):
        if len(self.digits) != self.ring.degree:
            raise StructuralError(f"{len(self.digits)} digits for a ring of degree {self.ring.degree}")
        m = self.ring.value
        if any(not 0 <= c < m for c in self.digits):
            raise StructuralError(f"digits {self.digits} not reduced into [0, {m})")

    def _check_same(self, other: "ChainRingElement"):
        if not isinstance(other, ChainRingElement):
            raise StructuralError(f"cannot combine {type(other).__name__} with a ring element")
        if other.ring != self.ring:
            raise StructuralError(f"ring mismatch: {self.ring} vs {other.ring}")

    def add(self, other: "ChainRingElement") -> "ChainRingElement":
        self._check_same(other)
        m = self.ring.value
        return ChainRingElement(self.ring, tuple((a + b) % m for a, b in zip(self.digits, other.digits)))

    def sub(self, other: "ChainRingElement") -> "ChainRingElement":
        self._check_same(other)
        m = self.ring.value
        return ChainRingElement(self.ring, tuple((a - b) % m for a, b in zip(self.digits, other.digits)))

    def neg(self) -> "ChainRingElement":
        m = self.ring.value
        return ChainRingElement(self.ring, tuple((-a) % m for a in self.digits))

    def mul(self, other: "ChainRingElement") -> "ChainRingElement":
        self._check_same(other)
        return ChainRingElement(self.ring, mul_digits(self.digits, other.digits, self.ring.relation, self.ring.value))

    def scale(self, n: int) -> "ChainRingElement":
        m = self.ring.value
        return ChainRingElement(self.ring, tuple((a * n) % m for a in self.digits))

    __add__ = add
    __sub__ = sub
    __neg__ = neg
    __mul__ = mul

    def is_zero(self) -> bool:
        return not any(self.digits)

    def valuation(self) -> int:
        """Largest v <= k with self in p^v R; the zero element has valuation k."""
        k = self.ring.k
        return min((p_valuation(c, self.ring.p, k) for c in self.digits), default=k)

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def unit_part(self) -> "ChainRingElement":
        """
        The unit u with self == u * p^v, v the valuation; digits are the exact quotients.
        """
        if self.is_zero():
            raise DomainError("zero has no unit part")
        v = self.valuation()
        pv = self.ring.p ** v
        return ChainRingElement(self.ring, tuple(c // pv for c in self.digits))

    def divide_by_p_power(self, v: int) -> "ChainRingElement":
        """Exact quotient self / p^v as the least-digit representative; requires valuation >= v."""
        if self.valuation() < v:
            raise DomainError(f"valuation {self.valuation()} < {v}")
        pv = self.ring.p ** v
        return ChainRingElement(self.ring, tuple(c // pv for c in self.digits))

    def residue(self) -> "ChainRingElement":
        return self.reduce_mod(1)

    def reduce_mod(self, k: int) -> "ChainRingElement":
        if k > self.ring.k:
            raise DomainError(f"cannot reduce from precision {self.ring.k} to {k}")
        return self.ring.with_exponent(k).element(self.digits)

    def lift(self, k: int) -> "ChainRingElement":
        """Least-digit lift into precision k >= current precision."""
        if k < self.ring.k:
            raise DomainError(f"cannot lift from precision {self.ring.k} to {k}")
        return ChainRingElement(self.ring.with_exponent(k), self.digits)

    def inverse(self) -> "ChainRingElement":
        """
        Invert mod p (extended Euclid in F_p[t]/(P)) and lift with Newton steps y <- y(2 - xy).
        """
        v = self.valuation()
        if v != 0:
            raise DomainError(f"{self} is not a unit (valuation {v})")
        ring = self.ring
        p = ring.p
        if ring.extension is None:
            y0 = [pow(self.digits[0] % p, -1, p)]
        else:
            _, s, _ = poly_xgcd_p(self.digits, ring.extension.monic_coefficients, p)
            y0 = s
        y = ring.element(y0)
        two = ring.from_int(2)
        precision = 1
        while precision < ring.k:
            y = y.mul(two.sub(self.mul(y)))
            precision *= 2
        return y

    def __int__(self):
        if self.ring.degree != 1:
            raise StructuralError("only elements of Z/p^k convert to int")
        return self.digits[0]

    def __str__(self):
        terms = []
        for i, c in enumerate(self.digits):
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*t")
            else:
                terms.append(f"{c}*t^{i}")
        return "+".join(terms)


def add(x: ChainRingElement, y: ChainRingElement) -> ChainRingElement:
    return x.add(y)


def mul(x: ChainRingElement, y: ChainRingElement) -> ChainRingElement:
    return x.mul(y)


def inverse(x: ChainRingElement) -> ChainRingElement:
    return x.inverse()


def valuation(x: ChainRingElement) -> int:
    return x.valuation()
