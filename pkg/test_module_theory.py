import pytest

from errors import BudgetExceeded, DomainError
from formulas import aut_count_formula
from module_theory import (ModuleType, RankVector, annihilated_by, brute_force_aut_count,
                           brute_force_element_count, enumerate_module_types, exponent, order_log_q,
                           quotient_mod_p, residue_rank, split_prime_power)


def test_queries():
    g = ModuleType.parse("2^1,1^2")
    assert residue_rank(g) == 3
    assert order_log_q(g) == 4
    assert exponent(g) == 2
    assert annihilated_by(g, 2) and not annihilated_by(g, 1)
    assert quotient_mod_p(g) == ModuleType.parse("1^3")
    assert g.order(3) == 81
    assert ModuleType.trivial().exponent() == 0


def test_parts_are_canonical():
    assert ModuleType(((1, 1), (2, 1), (1, 1))).parts == ((2, 1), (1, 2))
    assert ModuleType.from_exponents([0, 1, 2, 1]) == ModuleType.parse("2,1^2")
    with pytest.raises(DomainError):
        ModuleType(((0, 1),))
    with pytest.raises(DomainError):
        ModuleType.parse("x^1")


def test_text_forms():
    assert ModuleType.parse("0").format() == "0"
    assert ModuleType.parse("").is_trivial
    assert str(ModuleType.parse("1^2 , 3")) == "3^1,1^2"


def test_exponent_vector():
    assert ModuleType.parse("2^1,1^1").to_exponent_vector(3) == [0, 1, 2]
    with pytest.raises(DomainError):
        ModuleType.parse("1^3").to_exponent_vector(2)


def test_rank_vector():
    ranks = RankVector.from_targets([ModuleType.parse("1^2"), ModuleType.trivial()])
    assert tuple(ranks) == (2, 0)
    assert len(ranks) == 2


def test_enumerate_module_types():
    types = list(enumerate_module_types(3))
    assert len(types) == 7
    assert len(set(types)) == 7
    assert types[0].is_trivial
    assert {g.format() for g in enumerate_module_types(3, max_exponent=1)} == {"0", "1^1", "1^2", "1^3"}
    assert {g.format() for g in enumerate_module_types(4, rank=1)} == {"1^1", "2^1", "3^1", "4^1"}
    assert all(g.residue_degree == 2 for g in enumerate_module_types(2, residue_degree=2))


@pytest.mark.parametrize("text,q,expected", [
    ("0", 2, 1),
    ("1^2", 2, 6),
    ("2^1,1^1", 2, 8),
    ("1^1", 4, 3),
    ("1^1", 3, 2),
    ("2^1", 2, 2),
])
def test_aut_oracle_values(text, q, expected):
    assert brute_force_aut_count(ModuleType.parse(text), q) == expected


def test_aut_oracle_guards():
    with pytest.raises(DomainError):
        brute_force_aut_count(ModuleType.parse("1^1"), 6)
    with pytest.raises(BudgetExceeded):
        brute_force_aut_count(ModuleType.parse("1^12"), 2)


def test_aut_oracle_matches_formula():
    for q in (2, 3, 4):
        for g in enumerate_module_types(3 if q == 2 else 2):
            assert brute_force_aut_count(g, q) == aut_count_formula(g, q), (g.format(), q)


def test_element_count():
    assert brute_force_element_count(ModuleType.parse("2^1,1^1"), 2) == 8
    with pytest.raises(BudgetExceeded):
        brute_force_element_count(ModuleType.parse("1^30"), 2, budget_log2=10)


def test_split_prime_power():
    assert split_prime_power(9) == (3, 2)
    assert split_prime_power(2) == (2, 1)
    with pytest.raises(DomainError):
        split_prime_power(12)
