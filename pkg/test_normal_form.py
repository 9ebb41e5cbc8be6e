import numpy as np
import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as integer_smith_normal_form

from errors import PrecisionSaturated, StructuralError, UnsupportedDimension
from matrix_ops import (BlockPartition, RingMatrix, block_col_op, block_row_op, is_invertible, poly_eval,
                        random_block_op, random_matrix, residue_rank)
from module_theory import ModuleType
from normal_form import (cokernel_group_side, cokernel_type, cokernel_via_lee, lee_matrix, lee_snf,
                         minor_gcd_valuations, minor_identity_holds, smith_normal_form, underlying_group)
from ring_core import PolySpec, RingDescriptor

Z4 = RingDescriptor.of(2, 2)
Z8 = RingDescriptor.of(2, 3)
Z27 = RingDescriptor.of(3, 3)
R8 = RingDescriptor.of(2, 3, PolySpec((1, 1), 2))
QUADRATIC = PolySpec((1, 1), 2)


def _diagonal(snf, ring, n):
    return RingMatrix.diagonal(ring, [ring.p ** d if d < ring.k else 0 for d in snf.exponents])


def test_zero_matrix_is_fully_saturated():
    snf = smith_normal_form(RingMatrix.zero(Z8, 2))
    assert snf.exponents == (3, 3)
    assert snf.saturated


def test_snf_example():
    assert smith_normal_form(RingMatrix.from_rows(Z8, [[2, 4], [6, 4]])).exponents == (1, 3)


def test_identity_has_zero_exponents():
    assert smith_normal_form(RingMatrix.identity(R8, 3)).exponents == (0, 0, 0)


def test_non_square_rejected():
    with pytest.raises(StructuralError):
        smith_normal_form(RingMatrix.zero(Z8, 2, 3))


@pytest.mark.parametrize("ring", [Z8, Z27, R8])
def test_transforms_diagonalize(ring):
    rng = np.random.default_rng(17)
    for _ in range(20):
        x = random_matrix(ring, 3, 3, rng)
        snf = smith_normal_form(x, with_transforms=True)
        assert list(snf.exponents) == sorted(snf.exponents)
        assert is_invertible(snf.left) and is_invertible(snf.right)
        assert snf.left @ x @ snf.right == _diagonal(snf, ring, 3)


@pytest.mark.parametrize("ring", [Z8, R8])
def test_invariant_under_invertible_multiplication(ring):
    rng = np.random.default_rng(23)
    done = 0
    while done < 10:
        u, v = random_matrix(ring, 3, 3, rng), random_matrix(ring, 3, 3, rng)
        if not (is_invertible(u) and is_invertible(v)):
            continue
        x = random_matrix(ring, 3, 3, rng)
        assert smith_normal_form(u @ x @ v).exponents == smith_normal_form(x).exponents
        done += 1


@pytest.mark.parametrize("ring, sizes", [(Z8, [1, 2, 1]), (R8, [2, 1]), (Z27, [1, 1, 1, 1])])
def test_invariant_under_words_of_block_operations(ring, sizes):
    rng = np.random.default_rng(31)
    part = BlockPartition.of(sizes)
    n = sum(sizes)
    for _ in range(15):
        x = random_matrix(ring, n, n, rng)
        y = x
        for _ in range(int(rng.integers(2, 9))):
            op = random_block_op(part, ring, rng)
            if rng.integers(0, 2):
                y = block_row_op(y, part, op)
            else:
                y = block_col_op(y, part, op.transposed())
        assert smith_normal_form(y).exponents == smith_normal_form(x).exponents


def test_positive_exponents_count_the_residue_corank():
    rng = np.random.default_rng(29)
    for _ in range(30):
        x = random_matrix(Z4, 4, 4, rng)
        snf = smith_normal_form(x)
        assert sum(1 for d in snf.exponents if d >= 1) == 4 - residue_rank(x)


def test_cokernel_type():
    assert cokernel_type(RingMatrix.from_rows(Z8, [[2]])) == ModuleType(((1, 1),))
    with pytest.raises(PrecisionSaturated):
        cokernel_type(RingMatrix.from_rows(Z8, [[0]]))
    assert cokernel_type(RingMatrix.diagonal(Z8, [2, 2, 4])).parts == ((2, 1), (1, 2))
    assert cokernel_type(RingMatrix.diagonal(R8, [2, 1])) == ModuleType(((1, 1),), 2)


def test_minor_valuations():
    x = RingMatrix.from_rows(Z8, [[2, 4], [6, 4]])
    valuations = minor_gcd_valuations(x)
    assert valuations == [1, 4]
    assert minor_identity_holds(smith_normal_form(x).exponents, valuations, 3)
    assert minor_gcd_valuations(RingMatrix.identity(Z8, 2)) == [0, 0]
    assert minor_gcd_valuations(RingMatrix.zero(Z8, 2)) == [3, 6]


def test_minor_identity_on_random_matrices():
    rng = np.random.default_rng(31)
    for ring in (Z27, R8):
        for _ in range(15):
            x = random_matrix(ring, 3, 3, rng)
            assert minor_identity_holds(smith_normal_form(x).exponents, minor_gcd_valuations(x), ring.k)


def test_minor_identity_rejects_wrong_exponents():
    assert not minor_identity_holds([0, 1], [0, 2], 3)


def test_minor_dimension_limit():
    with pytest.raises(UnsupportedDimension):
        minor_gcd_valuations(RingMatrix.identity(Z8, 7))


def test_lee_transport_trivial():
    x = RingMatrix.from_rows(Z4, [[1]])
    assert cokernel_via_lee(x, PolySpec((0,), 2)).is_trivial
    assert cokernel_via_lee(x, QUADRATIC).is_trivial


def test_lee_transport_quadratic_example():
    x = RingMatrix.from_rows(Z4, [[0, 1], [1, 1]])
    g = cokernel_via_lee(x, QUADRATIC)
    assert g == ModuleType(((1, 1),), 2)
    assert underlying_group(g) == ModuleType.parse("1^2")
    assert cokernel_group_side(x, QUADRATIC) == underlying_group(g)
    assert lee_snf(x, QUADRATIC).exponents == (0, 1)


def test_lee_matrix_shape_and_ring():
    x = RingMatrix.from_rows(Z4, [[0, 1], [1, 1]])
    m = lee_matrix(x, QUADRATIC)
    assert m.ring.degree == 2
    assert str(m) == "0+3*t,1+0*t;1+0*t,1+3*t"
    with pytest.raises(StructuralError):
        lee_matrix(RingMatrix.identity(R8, 2), QUADRATIC)


@pytest.mark.parametrize("poly", [QUADRATIC, PolySpec((1,), 2), PolySpec((1, 1, 0), 2)])
def test_lee_transport_agrees_with_group_side(poly):
    rng = np.random.default_rng(37)
    ring = RingDescriptor.of(2, 3)
    for _ in range(25):
        x = random_matrix(ring, 3, 3, rng)
        group = smith_normal_form(poly_eval(poly, x))
        if group.saturated:
            continue
        assert underlying_group(cokernel_via_lee(x, poly)) == cokernel_group_side(x, poly)


def test_underlying_group():
    assert underlying_group(ModuleType.parse("2^1,1^1", 3)) == ModuleType.parse("2^3,1^3")
    assert underlying_group(ModuleType.trivial(2)).is_trivial


def _local_exponent(d: int, p: int, k: int) -> int:
    v = 0
    while v < k and d % p == 0:
        d //= p
        v += 1
    return v


@pytest.mark.parametrize("ring", [Z8, Z27])
def test_agrees_with_the_integer_smith_form_of_the_lift(ring):
    rng = np.random.default_rng(43)
    for _ in range(20):
        x = random_matrix(ring, 3, 3, rng)
        diagonal = integer_smith_normal_form(Matrix(x.to_int_rows()), domain=ZZ)
        expected = sorted(_local_exponent(int(diagonal[i, i]), ring.p, ring.k) for i in range(3))
        assert list(smith_normal_form(x).exponents) == expected
