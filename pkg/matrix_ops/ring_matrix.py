"""
Dense immutable matrices over a chain ring.
"""
import itertools
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple, Union

import numpy as np

from errors import DomainError, StructuralError
from ring_core import ChainRingElement, PolySpec, RingDescriptor

Scalar = Union[int, Sequence[int], ChainRingElement]


def _as_element(ring: RingDescriptor, value: Scalar) -> ChainRingElement:
    if isinstance(value, ChainRingElement):
        if value.ring != ring:
            raise StructuralError(f"entry over {value.ring} in a matrix over {ring}")
        return value
    if isinstance(value, (int, np.integer)):
        return ring.from_int(int(value))
    return ring.element([int(c) for c in value])


@dataclass(frozen=True)
class RingMatrix:
    """A rows x cols matrix over one chain ring, entries stored row-major."""
    ring: RingDescriptor
    rows: int
    cols: int
    entries: Tuple[ChainRingElement, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise StructuralError(f"matrix shape {self.rows}x{self.cols} must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise StructuralError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        for e in self.entries:
            if e.ring != self.ring:
                raise StructuralError(f"entry over {e.ring} in a matrix over {self.ring}")

    @classmethod
    def from_rows(cls, ring: RingDescriptor, rows: Sequence[Sequence[Scalar]]) -> "RingMatrix":
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise StructuralError("ragged or empty row list")
        entries = tuple(_as_element(ring, v) for r in rows for v in r)
        return cls(ring, len(rows), len(rows[0]), entries)

    @classmethod
    def from_array(cls, ring: RingDescriptor, array: np.ndarray) -> "RingMatrix":
        """Accepts (rows, cols) integers or (rows, cols, d) digit tensors."""
        array = np.asarray(array)
        if array.ndim == 2:
            array = array[:, :, None]
        rows, cols, d = array.shape
        if d != ring.degree:
            raise StructuralError(f"digit depth {d} for a ring of degree {ring.degree}")
        entries = tuple(ring.element([int(x) for x in array[i, j]]) for i in range(rows) for j in range(cols))
        return cls(ring, rows, cols, entries)

    @classmethod
    def identity(cls, ring: RingDescriptor, n: int) -> "RingMatrix":
        return cls.diagonal(ring, [1] * n)

    @classmethod
    def zero(cls, ring: RingDescriptor, rows: int, cols: int = None) -> "RingMatrix":
        cols = rows if cols is None else cols
        z = ring.zero()
        return cls(ring, rows, cols, (z,) * (rows * cols))

    @classmethod
    def diagonal(cls, ring: RingDescriptor, values: Sequence[Scalar]) -> "RingMatrix":
        n = len(values)
        z = ring.zero()
        entries = [z] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = _as_element(ring, v)
        return cls(ring, n, n, tuple(entries))

    def entry(self, i: int, j: int) -> ChainRingElement:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[ChainRingElement]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_lists(self) -> List[List[ChainRingElement]]:
        return [self.row(i) for i in range(self.rows)]

    def to_int_rows(self) -> List[list]:
        """Integers for Z/p^k, digit lists for extension rings."""
        if self.ring.degree == 1:
            return [[e.digits[0] for e in self.row(i)] for i in range(self.rows)]
        return [[list(e.digits) for e in self.row(i)] for i in range(self.rows)]

    def to_array(self) -> np.ndarray:
        """(rows, cols, d) int64 digit tensor."""
        out = np.zeros((self.rows, self.cols, self.ring.degree), dtype=np.int64)
        for idx, e in enumerate(self.entries):
            out[idx // self.cols, idx % self.cols, :] = e.digits
        return out

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def transpose(self) -> "RingMatrix":
        entries = tuple(self.entry(i, j) for j in range(self.cols) for i in range(self.rows))
        return RingMatrix(self.ring, self.cols, self.rows, entries)

    def map_entries(self, fn) -> "RingMatrix":
        return RingMatrix(self.ring, self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __str__(self):
        return ";".join(",".join(str(e) for e in self.row(i)) for i in range(self.rows))


def _check_ring(a: RingMatrix, b: RingMatrix):
    if a.ring != b.ring:
        raise StructuralError(f"ring mismatch: {a.ring} vs {b.ring}")


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    _check_ring(a, b)
    if a.cols != b.rows:
        raise StructuralError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    ring = a.ring
    entries = []
    b_cols = [[b.entry(i, j) for i in range(b.rows)] for j in range(b.cols)]
    for i in range(a.rows):
        row = a.row(i)
        for j in range(b.cols):
            acc = ring.zero()
            for x, y in zip(row, b_cols[j]):
                if not x.is_zero() and not y.is_zero():
                    acc = acc.add(x.mul(y))
            entries.append(acc)
    return RingMatrix(ring, a.rows, b.cols, tuple(entries))


def mat_add(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    _check_ring(a, b)
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise StructuralError(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    return RingMatrix(a.ring, a.rows, a.cols, tuple(x.add(y) for x, y in zip(a.entries, b.entries)))


def mat_sub(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    _check_ring(a, b)
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise StructuralError(f"cannot subtract {b.rows}x{b.cols} from {a.rows}x{a.cols}")
    return RingMatrix(a.ring, a.rows, a.cols, tuple(x.sub(y) for x, y in zip(a.entries, b.entries)))


def mat_scale(c: Scalar, a: RingMatrix) -> RingMatrix:
    c = _as_element(a.ring, c)
    return a.map_entries(lambda e: c.mul(e))


def poly_eval(poly: PolySpec, x: RingMatrix) -> RingMatrix:
    """
    Horner evaluation of X^d + a_{d-1} X^{d-1} + ... + a_0 I.

    Args:
        poly (PolySpec): monic polynomial; coefficients are reduced into X's ring.
        x (RingMatrix): square matrix.

    Returns:
        RingMatrix: P(X).
    """
    if not x.is_square:
        raise StructuralError(f"poly_eval needs a square matrix, got {x.rows}x{x.cols}")
    if poly.p != x.ring.p:
        raise StructuralError(f"polynomial over F_{poly.p} evaluated over {x.ring}")
    identity = RingMatrix.identity(x.ring, x.rows)
    acc = identity
    for a in reversed(poly.coefficients):
        acc = mat_add(mat_mul(acc, x), mat_scale(a, identity))
    return acc


def residue_rank(x: RingMatrix) -> int:
    """Rank over the residue field F_q of X mod p (Gaussian elimination)."""
    rows = [[e.reduce_mod(1) for e in x.row(i)] for i in range(x.rows)]
    rank = 0
    col = 0
    while rank < x.rows and col < x.cols:
        pivot = next((i for i in range(rank, x.rows) if not rows[i][col].is_zero()), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [inv.mul(e) for e in rows[rank]]
        for i in range(x.rows):
            if i != rank and not rows[i][col].is_zero():
                c = rows[i][col]
                rows[i] = [a.sub(c.mul(b)) for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def is_invertible(x: RingMatrix) -> bool:
    """Invertible over the chain ring iff nonsingular mod p."""
    if not x.is_square:
        return False
    return residue_rank(x) == x.rows


def reduce_mod(x: RingMatrix, k: int) -> RingMatrix:
    if k > x.ring.k:
        raise DomainError(f"cannot reduce from precision {x.ring.k} to {k}")
    if k < 1:
        raise DomainError(f"precision must be >= 1, got {k}")
    return RingMatrix(x.ring.with_exponent(k), x.rows, x.cols, tuple(e.reduce_mod(k) for e in x.entries))


def lift_canonical(xbar: RingMatrix, k: int) -> RingMatrix:
    """The lift whose entries keep their least nonnegative digits."""
    if k < xbar.ring.k:
        raise DomainError(f"cannot lift from precision {xbar.ring.k} to {k}")
    return RingMatrix(xbar.ring.with_exponent(k), xbar.rows, xbar.cols, tuple(e.lift(k) for e in xbar.entries))


def iter_lifts(xbar: RingMatrix, k: int) -> Iterator[RingMatrix]:
    """
    Odometer over every X at precision k with X == xbar mod p^{k0}.

    Yields p^{(k - k0) rows cols d} matrices, X = lift(xbar) + p^{k0} A.
    """
    base = lift_canonical(xbar, k)
    k0 = xbar.ring.k
    ring = base.ring
    step = ring.p ** k0
    width = ring.p ** (k - k0)
    d = ring.degree
    n_entries = xbar.rows * xbar.cols
    for digits in itertools.product(range(width), repeat=n_entries * d):
        entries = []
        for idx, e in enumerate(base.entries):
            delta = digits[idx * d:(idx + 1) * d]
            entries.append(ring.element([c + step * a for c, a in zip(e.digits, delta)]))
        yield RingMatrix(ring, xbar.rows, xbar.cols, tuple(entries))


def companion(poly: PolySpec, ring: RingDescriptor) -> RingMatrix:
    """Companion matrix: ones on the subdiagonal, last column -a_0..-a_{d-1}."""
    d = poly.degree
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i, a in enumerate(poly.coefficients):
        rows[i][d - 1] = -a
    return RingMatrix.from_rows(ring, rows)


def random_matrix(ring: RingDescriptor, rows: int, cols: int, rng) -> RingMatrix:
    """Uniform matrix drawn from a numpy Generator."""
    array = rng.integers(0, ring.value, size=(rows, cols, ring.degree))
    return RingMatrix.from_array(ring, array)


def random_invertible(ring: RingDescriptor, n: int, rng) -> RingMatrix:
    """Rejection-sample a uniform element of GL_n(ring)."""
    while True:
        g = random_matrix(ring, n, n, rng)
        if is_invertible(g):
            return g
