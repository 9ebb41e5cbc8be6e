"""
Block elementary operations on a partitioned square matrix.

A row operation is left multiplication by an invertible matrix E; the column
operation with the same op is right multiplication by the transpose of the row
matrix of op.transposed(), which makes

    block_col_op(X, part, op.transposed()) == transpose(block_row_op(transpose(X), part, op))

hold exactly. Block indices are 0-based.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from errors import DomainError, StructuralError
from matrix_ops.ring_matrix import RingMatrix, is_invertible, mat_mul, random_invertible, random_matrix
from ring_core import RingDescriptor


@dataclass(frozen=True)
class BlockPartition:
    """Sizes n_1..n_s of the diagonal blocks."""
    sizes: Tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(s < 1 for s in self.sizes):
            raise StructuralError(f"block sizes must be positive, got {list(self.sizes)}")

    @classmethod
    def of(cls, sizes: Sequence[int]) -> "BlockPartition":
        return cls(tuple(int(s) for s in sizes))

    @property
    def dimension(self) -> int:
        return sum(self.sizes)

    @property
    def offsets(self) -> List[int]:
        out, acc = [], 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return out

    def block_range(self, i: int) -> range:
        self.check_index(i)
        start = self.offsets[i]
        return range(start, start + self.sizes[i])

    def check_index(self, i: int):
        if not 0 <= i < len(self.sizes):
            raise StructuralError(f"block index {i} out of range for {len(self.sizes)} blocks")

    def check_matrix(self, x: RingMatrix):
        if not x.is_square or x.rows != self.dimension:
            raise StructuralError(f"partition of {self.dimension} applied to a {x.rows}x{x.cols} matrix")


@dataclass(frozen=True)
class SwapBlocks:
    i: int
    j: int

    def transposed(self) -> "SwapBlocks":
        return self


@dataclass(frozen=True)
class ScaleBlock:
    """Replace block i by g times it; g is an invertible n_i x n_i matrix."""
    i: int
    g: RingMatrix

    def transposed(self) -> "ScaleBlock":
        return ScaleBlock(self.i, self.g.transpose())


@dataclass(frozen=True)
class AddBlockMultiple:
    """Rows: block i += A * block j with A of shape n_i x n_j. Columns: block i += block j * A, A n_j x n_i."""
    i: int
    j: int
    a: RingMatrix

    def transposed(self) -> "AddBlockMultiple":
        return AddBlockMultiple(self.i, self.j, self.a.transpose())


BlockOp = Union[SwapBlocks, ScaleBlock, AddBlockMultiple]


def _validate(part: BlockPartition, op: BlockOp, ring: RingDescriptor, columns: bool):
    if isinstance(op, SwapBlocks):
        part.check_index(op.i)
        part.check_index(op.j)
    elif isinstance(op, ScaleBlock):
        part.check_index(op.i)
        n_i = part.sizes[op.i]
        if op.g.ring != ring:
            raise StructuralError(f"scaling block over {op.g.ring} applied over {ring}")
        if (op.g.rows, op.g.cols) != (n_i, n_i):
            raise StructuralError(f"block {op.i} has size {n_i}, scaling matrix is {op.g.rows}x{op.g.cols}")
        if not is_invertible(op.g):
            raise DomainError(f"scaling matrix for block {op.i} is not invertible")
    elif isinstance(op, AddBlockMultiple):
        part.check_index(op.i)
        part.check_index(op.j)
        if op.i == op.j:
            raise DomainError("add_multiple needs two different blocks")
        if op.a.ring != ring:
            raise StructuralError(f"multiplier over {op.a.ring} applied over {ring}")
        n_i, n_j = part.sizes[op.i], part.sizes[op.j]
        expected = (n_j, n_i) if columns else (n_i, n_j)
        if (op.a.rows, op.a.cols) != expected:
            raise StructuralError(f"multiplier is {op.a.rows}x{op.a.cols}, expected {expected[0]}x{expected[1]}")
    else:
        raise StructuralError(f"unknown block operation {op!r}")


def _swap_order(part: BlockPartition, op: SwapBlocks) -> List[int]:
    """Row indices in their new order after exchanging blocks i and j."""
    blocks = [list(part.block_range(b)) for b in range(len(part.sizes))]
    blocks[op.i], blocks[op.j] = blocks[op.j], blocks[op.i]
    return [r for b in blocks for r in b]


def block_row_op(x: RingMatrix, part: BlockPartition, op: BlockOp) -> RingMatrix:
    """
    Apply a block row operation.

    Args:
        x (RingMatrix): square matrix of the partition's dimension.
        part (BlockPartition): the block sizes.
        op (BlockOp): SwapBlocks, ScaleBlock or AddBlockMultiple.

    Returns:
        RingMatrix: E * x for the invertible E = row_op_matrix(part, op, x.ring).
    """
    part.check_matrix(x)
    _validate(part, op, x.ring, columns=False)
    rows = x.to_lists()
    if isinstance(op, SwapBlocks):
        rows = [rows[r] for r in _swap_order(part, op)]
    elif isinstance(op, ScaleBlock):
        idx = list(part.block_range(op.i))
        block = RingMatrix(x.ring, len(idx), x.cols, tuple(e for r in idx for e in rows[r]))
        scaled = mat_mul(op.g, block)
        for local, r in enumerate(idx):
            rows[r] = scaled.row(local)
    else:
        idx_i = list(part.block_range(op.i))
        idx_j = list(part.block_range(op.j))
        block_j = RingMatrix(x.ring, len(idx_j), x.cols, tuple(e for r in idx_j for e in rows[r]))
        delta = mat_mul(op.a, block_j)
        for local, r in enumerate(idx_i):
            rows[r] = [a.add(b) for a, b in zip(rows[r], delta.row(local))]
    return RingMatrix.from_rows(x.ring, rows)


def block_col_op(x: RingMatrix, part: BlockPartition, op: BlockOp) -> RingMatrix:
    """Column counterpart of block_row_op: x * col_op_matrix(part, op, x.ring)."""
    part.check_matrix(x)
    _validate(part, op, x.ring, columns=True)
    return block_row_op(x.transpose(), part, op.transposed()).transpose()


def row_op_matrix(part: BlockPartition, op: BlockOp, ring: RingDescriptor) -> RingMatrix:
    """The invertible E with block_row_op(X, part, op) == E * X."""
    identity = RingMatrix.identity(ring, part.dimension)
    return block_row_op(identity, part, op)


def col_op_matrix(part: BlockPartition, op: BlockOp, ring: RingDescriptor) -> RingMatrix:
    """The invertible F with block_col_op(X, part, op) == X * F."""
    identity = RingMatrix.identity(ring, part.dimension)
    return block_col_op(identity, part, op)


def random_block_op(part: BlockPartition, ring: RingDescriptor, rng) -> BlockOp:
    """A swap, scale or add_multiple on random blocks; a single block only admits scale."""
    s = len(part.sizes)
    kind = int(rng.integers(0, 3)) if s > 1 else 1
    if kind == 1:
        i = int(rng.integers(0, s))
        return ScaleBlock(i, random_invertible(ring, part.sizes[i], rng))
    i, j = (int(v) for v in rng.choice(s, size=2, replace=False))
    if kind == 0:
        return SwapBlocks(i, j)
    return AddBlockMultiple(i, j, random_matrix(ring, part.sizes[i], part.sizes[j], rng))
