import itertools

import numpy as np
import pytest

from errors import DomainError, StructuralError
from matrix_ops import (AddBlockMultiple, BlockPartition, RingMatrix, ScaleBlock, SwapBlocks, block_col_op,
                        block_row_op, col_op_matrix, companion, is_invertible, iter_lifts, lift_canonical,
                        mat_mul, poly_eval, random_block_op, random_invertible, random_matrix, reduce_mod, residue_rank,
                        row_op_matrix)
from ring_core import PolySpec, RingDescriptor

Z4 = RingDescriptor.of(2, 2)
Z8 = RingDescriptor.of(2, 3)
F2 = RingDescriptor.of(2, 1)
Z9 = RingDescriptor.of(3, 2)
R4 = RingDescriptor.of(2, 2, PolySpec((1, 1), 2))
QUADRATIC = PolySpec((1, 1), 2)


def test_identity_is_neutral():
    rng = np.random.default_rng(3)
    for ring in (Z8, R4):
        a = random_matrix(ring, 3, 3, rng)
        assert RingMatrix.identity(ring, 3) @ a == a
        assert a @ RingMatrix.identity(ring, 3) == a


def test_nilpotent_scalar_matrix():
    two = RingMatrix.from_rows(Z4, [[2, 0], [0, 2]])
    assert mat_mul(two, two) == RingMatrix.zero(Z4, 2)


def test_product_shape_mismatch():
    with pytest.raises(StructuralError):
        RingMatrix.zero(Z8, 2, 3) @ RingMatrix.zero(Z8, 2, 3)
    with pytest.raises(StructuralError):
        RingMatrix.zero(Z8, 2) @ RingMatrix.zero(Z4, 2)


def test_poly_eval_example():
    x = RingMatrix.from_rows(Z4, [[0, 1], [1, 1]])
    assert poly_eval(QUADRATIC, x).to_int_rows() == [[2, 2], [2, 0]]


@pytest.mark.parametrize("poly", [PolySpec((1, 1), 2), PolySpec((1, 1, 0), 2), PolySpec((1, 0), 3)])
def test_companion_is_a_root(poly):
    ring = RingDescriptor.of(poly.p, 3)
    c = companion(poly, ring)
    assert poly_eval(poly, c).is_zero()


def test_poly_eval_needs_square():
    with pytest.raises(StructuralError):
        poly_eval(QUADRATIC, RingMatrix.zero(Z4, 2, 3))


def test_residue_rank_and_invertibility():
    assert residue_rank(RingMatrix.from_rows(Z4, [[2, 0], [0, 2]])) == 0
    assert residue_rank(RingMatrix.from_rows(Z9, [[1, 2], [2, 4]])) == 1
    assert is_invertible(RingMatrix.from_rows(Z8, [[1, 2], [0, 3]]))
    assert not is_invertible(RingMatrix.from_rows(Z8, [[2, 1], [4, 2]]))
    assert not is_invertible(RingMatrix.zero(Z8, 2, 3))
    assert is_invertible(RingMatrix.from_rows(R4, [[[0, 1]]]))


def test_swap_blocks():
    part = BlockPartition.of([1, 2])
    x = RingMatrix.from_rows(Z8, [[1, 2, 3], [4, 5, 6], [7, 0, 1]])
    swapped = block_row_op(x, part, SwapBlocks(0, 1))
    assert swapped.to_int_rows() == [[4, 5, 6], [7, 0, 1], [1, 2, 3]]


def test_scale_block():
    part = BlockPartition.of([2, 1])
    x = RingMatrix.from_rows(Z8, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    g = RingMatrix.from_rows(Z8, [[0, 1], [1, 0]])
    assert block_row_op(x, part, ScaleBlock(0, g)).to_int_rows() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    with pytest.raises(DomainError):
        block_row_op(x, part, ScaleBlock(0, RingMatrix.from_rows(Z8, [[2, 0], [0, 1]])))


def test_add_block_multiple_matches_its_matrix():
    rng = np.random.default_rng(11)
    part = BlockPartition.of([2, 1, 1])
    x = random_matrix(Z8, 4, 4, rng)
    op = AddBlockMultiple(0, 2, RingMatrix.from_rows(Z8, [[3], [5]]))
    assert block_row_op(x, part, op) == row_op_matrix(part, op, Z8) @ x
    assert block_row_op(x, part, op).row(3) == x.row(3)


def test_column_ops_mirror_row_ops():
    rng = np.random.default_rng(5)
    part = BlockPartition.of([1, 2])
    g = RingMatrix.from_rows(R4, [[1, [0, 1]], [0, 1]])
    ops = [SwapBlocks(0, 1), ScaleBlock(1, g), AddBlockMultiple(1, 0, random_matrix(R4, 2, 1, rng))]
    for op in ops:
        x = random_matrix(R4, 3, 3, rng)
        column = block_col_op(x, part, op.transposed())
        assert column == block_row_op(x.transpose(), part, op).transpose()
        assert block_col_op(x, part, op.transposed()) == x @ col_op_matrix(part, op.transposed(), R4)


def test_random_block_ops_are_invertible():
    rng = np.random.default_rng(9)
    part = BlockPartition.of([2, 1])
    kinds = set()
    for _ in range(40):
        op = random_block_op(part, R4, rng)
        kinds.add(type(op))
        assert is_invertible(row_op_matrix(part, op, R4))
    assert kinds == {SwapBlocks, ScaleBlock, AddBlockMultiple}
    assert all(isinstance(random_block_op(BlockPartition.of([3]), Z8, rng), ScaleBlock) for _ in range(5))
    assert is_invertible(random_invertible(Z9, 3, rng))


def test_block_op_errors():
    part = BlockPartition.of([1, 1])
    x = RingMatrix.identity(Z8, 2)
    with pytest.raises(StructuralError):
        block_row_op(x, part, SwapBlocks(0, 2))
    with pytest.raises(DomainError):
        block_row_op(x, part, AddBlockMultiple(1, 1, RingMatrix.identity(Z8, 1)))
    with pytest.raises(StructuralError):
        block_row_op(RingMatrix.identity(Z8, 3), part, SwapBlocks(0, 1))
    with pytest.raises(StructuralError):
        BlockPartition.of([2, 0])


def test_lift_then_reduce():
    xbar = RingMatrix.from_rows(F2, [[1, 0], [1, 1]])
    assert reduce_mod(lift_canonical(xbar, 3), 1) == xbar
    with pytest.raises(DomainError):
        reduce_mod(xbar, 2)


def test_iter_lifts_covers_the_fibre():
    xbar = RingMatrix.from_rows(F2, [[0, 1], [1, 1]])
    lifts = list(iter_lifts(xbar, 2))
    assert len(lifts) == 16
    assert len(set(lifts)) == 16
    assert all(reduce_mod(x, 1) == xbar for x in lifts)


def test_poly_eval_commutes_with_reduction():
    xbar = RingMatrix.from_rows(F2, [[0, 1], [1, 1]])
    for x in iter_lifts(xbar, 2):
        assert reduce_mod(poly_eval(QUADRATIC, x), 1) == poly_eval(QUADRATIC, xbar)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_corank_of_quadratic_image_is_even(n):
    for bits in itertools.product(range(2), repeat=n * n):
        xbar = RingMatrix.from_array(F2, np.array(bits).reshape(n, n))
        assert (n - residue_rank(poly_eval(QUADRATIC, xbar))) % 2 == 0


def test_text_form():
    x = RingMatrix.from_rows(Z8, [[1, 2], [3, 4]])
    assert str(x) == "1,2;3,4"
    assert str(RingMatrix.from_rows(R4, [[[1, 3]]])) == "1+3*t"
