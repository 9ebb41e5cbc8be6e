from fractions import Fraction

import pytest

from errors import DomainError, StructuralError
from formulas import (ProblemInstance, aut_count_formula, cl_limit, gl_order, l1deg1_count, main2_check_rhs,
                      main2_factor, main3_count, main_limit, rank_count_formula, reduced_block_count,
                      residue_factor, truncation_index)
from module_theory import ModuleType

LINEAR = ProblemInstance.parse(2, 1, 1, ["0,1"], ["1^1"])
QUADRATIC = ProblemInstance.parse(2, 1, 2, ["1,1,1"], ["1^1"])
JOINT = ProblemInstance.parse(2, 1, 2, ["0,1", "-1,1"], ["1^1", "1^1"])


@pytest.mark.parametrize("text,q,expected", [("0", 2, 1), ("1^1", 2, 1), ("1^2", 2, 6),
                                             ("2^1,1^1", 2, 8), ("1^1", 4, 3), ("2^1", 3, 6)])
def test_aut_count_formula(text, q, expected):
    assert aut_count_formula(ModuleType.parse(text), q) == expected


def test_gl_order():
    assert gl_order(0, 5) == 1
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48


def test_rank_counts():
    assert [rank_count_formula(2, r, 2) for r in range(3)] == [1, 9, 6]
    for n, q in ((2, 3), (3, 2), (3, 3)):
        assert sum(rank_count_formula(n, r, q) for r in range(n + 1)) == q ** (n * n)
        assert rank_count_formula(n, n, q) == gl_order(n, q)
    with pytest.raises(DomainError):
        rank_count_formula(2, 3, 2)


def test_main3_examples():
    assert main3_count(LINEAR) == 1
    assert main3_count(QUADRATIC) == 12
    assert main3_count(JOINT) == 4


def test_proven_integral_counts_are_ints():
    assert type(main3_count(QUADRATIC)) is int
    assert type(l1deg1_count(ModuleType.parse("1^1", 2), 4, 1, 1)) is int
    below = ProblemInstance.parse(2, 1, 1, ["0,1", "1,1"], ["1^1", "1^1"])
    assert isinstance(main3_count(below), Fraction)


def test_main2_factor():
    assert main2_factor(ProblemInstance.parse(2, 0, 1, ["0,1"], ["0"])) == 1
    assert main2_factor(LINEAR) == Fraction(1, 2)
    assert main2_factor(JOINT) == Fraction(1, 4)
    assert main2_check_rhs(JOINT, Fraction(6, 16)) == Fraction(24, 256)


def test_main3_below_generator_bound_keeps_the_fraction():
    inst = ProblemInstance.parse(2, 1, 1, ["0,1", "1,1"], ["1^1", "1^1"])
    assert inst.warnings
    assert not inst.dimension_ok
    assert main3_count(inst) == Fraction(1, 2)


def test_residue_factor():
    assert residue_factor(ModuleType.trivial(), 7) == 1
    assert residue_factor(ModuleType.parse("1^1"), 4) == Fraction(3, 4)


def test_truncation_index():
    assert truncation_index(2, 1e-9) == 31
    with pytest.raises(DomainError):
        truncation_index(2, 0)


def test_main_limit_linear_trivial():
    inst = ProblemInstance.parse(2, 0, 1, ["0,1"], ["0"])
    limit = main_limit(inst, tol=1e-9)
    assert limit.value == pytest.approx(0.2887880951, abs=1e-9)
    assert limit.truncation_index == 31


def test_joint_limit_is_a_product():
    one = main_limit(ProblemInstance.parse(3, 1, 1, ["0,1"], ["1^1"]))
    two = main_limit(ProblemInstance.parse(3, 1, 1, ["1,0,1"], ["0"]))
    both = main_limit(ProblemInstance.parse(3, 1, 1, ["0,1", "1,0,1"], ["1^1", "0"]))
    assert both.value == pytest.approx(one.value * two.value, rel=1e-10)


def test_cl_limit():
    assert cl_limit(2, [1], [0], tol=1e-9).value == pytest.approx(0.2887880951, abs=1e-9)
    assert cl_limit(2, [1, 2], [0, 0]).value == pytest.approx(
        cl_limit(2, [1], [0]).value * cl_limit(2, [2], [0]).value, rel=1e-10)
    with pytest.raises(DomainError):
        cl_limit(2, [1], [0, 1])


def test_limit_factorizes_through_the_residue_limit():
    inst = ProblemInstance.parse(2, 2, 3, ["0,1", "1,1,1"], ["2^1", "1^1"])
    residue = cl_limit(2, inst.degrees, inst.ranks)
    assert float(main2_factor(inst)) * residue.value == pytest.approx(main_limit(inst).value, rel=1e-10)


def test_l1deg1_count():
    assert l1deg1_count(ModuleType.trivial(), 2, 0, 1) == 1
    assert l1deg1_count(ModuleType.parse("1^1", 2), 4, 1, 1) == 3
    assert l1deg1_count(ModuleType.parse("1^1"), 2, 1, 2) == main3_count(
        ProblemInstance.parse(2, 1, 2, ["0,1"], ["1^1"])) == 8
    with pytest.raises(DomainError):
        l1deg1_count(ModuleType.parse("2^1"), 2, 1, 1)


def test_reduced_block_count():
    assert reduced_block_count(ModuleType.trivial(), 2, 1) == 1
    assert reduced_block_count(ModuleType.parse("1^1"), 2, 1) == 1
    assert reduced_block_count(ModuleType.parse("2^1"), 2, 2) == 1
    assert reduced_block_count(ModuleType.parse("1^2"), 2, 1) == 6



def test_instance_errors():
    with pytest.raises(DomainError):
        ProblemInstance.parse(4, 1, 1, ["0,1"], ["0"])
    with pytest.raises(DomainError):
        ProblemInstance.parse(2, 1, 1, ["0,1", "2,1"], ["0", "0"])
    with pytest.raises(DomainError):
        ProblemInstance.parse(2, 1, 1, ["0,1"], ["2^1"])
    with pytest.raises(StructuralError):
        ProblemInstance.parse(2, 1, 1, ["0,1"], ["0", "0"])


def test_instance_attaches_residue_degrees():
    inst = ProblemInstance.parse(2, 1, 3, ["1,1,1"], ["1^1"])
    assert inst.targets[0].residue_degree == 2
    assert inst.qs == [4]
    assert inst.residue_dimension() == 2
    assert inst.describe()["polys"] == ["1,1,1"]
