#!/usr/bin/env python3
"""
Tests de vectores y multiconjuntos balanceados, su enumeración y los
experimentos con determinantes de matrices 0/1.
"""

import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from GenPerm.balanced import (
    BalancedVector, LinearCongruential, SubsetMultiset, balance_of, complexity_from_support,
    complexity_of_balanced, determinant_distribution_check, determinant_experiment,
    enumerate_irreducible_balanced, find_balanced_submultiset, is_irreducible_balanced,
    is_z_irreducible, max_zero_one_determinant, primitive_vector, row_operation_check,
    support_count_bound, support_independent, verify_complexity_bound, z_irreducible_search,
)
from GenPerm.core import mask_from_elements
from GenPerm.errors import (
    ElementOutOfRange, GroundSetOutOfRange, NegativeEntry, ParamOutOfRange,
    SingularSystem, Unbalanced, ZeroVector,
)


def _multiset(N, rows):
    return SubsetMultiset.from_sets(N, [mask_from_elements(r, N) for r in rows])


EXAMPLE_N4 = [[1], [1], [2, 3], [2, 4], [3, 4]]
EXAMPLE_N5 = [[1, 2, 3, 4], [4], [1, 2], [1, 3, 5], [2, 3, 5], [4, 5]]


# --- vectores ---

def test_vector_merges_and_orders_entries():
    v = BalancedVector(2, ((3, 1), (1, 1), (1, 2), (2, 0)))
    assert v.entries == ((1, Fraction(3)), (3, Fraction(1)))
    assert v.support == (1, 3)
    assert v.dense() == (3, 0, 1)
    assert v.coverage() == (4, 1)
    assert balance_of(v) is None


def test_vector_validation():
    with pytest.raises(NegativeEntry):
        BalancedVector(2, ((1, -1),))
    with pytest.raises(ElementOutOfRange):
        BalancedVector(2, ((4, 1),))
    with pytest.raises(ElementOutOfRange):
        SubsetMultiset(2, ((0, 1),))
    with pytest.raises(GroundSetOutOfRange):
        BalancedVector(0, ())


def test_multiset_expands_with_repetitions():
    M = _multiset(4, EXAMPLE_N4)
    assert M.size == 5
    assert M.sets() == [1, 1, 0b0110, 0b1010, 0b1100]
    assert balance_of(M.to_vector()) == 2


def test_primitive_form_and_complexity():
    v = BalancedVector(3, ((0b011, "1/2"), (0b101, "1/2"), (0b110, "1/2")))
    assert primitive_vector(v).dense() == (0, 0, 0, 1, 1, 1, 0)
    assert complexity_of_balanced(v) == 2
    assert complexity_of_balanced(v.scale(6)) == 2


def test_complexity_errors():
    with pytest.raises(ZeroVector):
        complexity_of_balanced(BalancedVector(2, ()))
    with pytest.raises(Unbalanced):
        complexity_of_balanced(_multiset(2, [[1]]).to_vector())
    with pytest.raises(ZeroVector):
        primitive_vector(BalancedVector(2, ()))


# --- irreducibilidad ---

def test_example_n4_is_irreducible():
    M = _multiset(4, EXAMPLE_N4)
    v = M.to_vector()
    cert = is_irreducible_balanced(v)
    assert complexity_of_balanced(v) == 2
    assert cert
    assert (cert.support_size, cert.support_rank, cert.solution_dimension) == (4, 4, 1)
    assert support_independent(v)
    assert is_z_irreducible(M)


def test_example_n5_is_z_irreducible_but_reducible():
    """Z-irreducible no implica irreducible."""
    M = _multiset(5, EXAMPLE_N5)
    assert balance_of(M.to_vector()) == 3
    assert is_z_irreducible(M)
    assert not is_irreducible_balanced(M.to_vector())


def test_reducible_multiset_has_witness():
    M = _multiset(2, [[1], [2], [1, 2]])
    witness = find_balanced_submultiset(M)
    assert witness is not None
    assert witness.counts == ((1, 1), (2, 1))
    assert balance_of(witness.to_vector()) == 1
    assert not is_z_irreducible(M)
    assert not is_irreducible_balanced(M.to_vector())


def test_unbalanced_input_is_rejected():
    M = _multiset(3, [[1, 2], [3]])
    assert balance_of(M.to_vector()) == 1
    with pytest.raises(Unbalanced):
        is_irreducible_balanced(_multiset(3, [[1, 2]]).to_vector())
    with pytest.raises(Unbalanced):
        find_balanced_submultiset(_multiset(3, [[1, 2]]))


# --- soportes ---

def test_complexity_from_support_n4():
    sets = [mask_from_elements(r, 4) for r in ([1], [2, 3], [2, 4], [3, 4])]
    solution = complexity_from_support(sets, 4)
    assert solution.m == 2
    assert solution.x == (2, 1, 1, 1)
    assert solution.determinant == 2
    assert solution.gcd_factor == 1


def test_support_without_positive_solution():
    assert complexity_from_support([0b01], 2) is None
    assert complexity_from_support([0b01, 0b11], 2) is None


def test_dependent_support_is_singular():
    with pytest.raises(SingularSystem):
        complexity_from_support([0b01, 0b10, 0b11], 2)
    with pytest.raises(SingularSystem):
        complexity_from_support([], 2)


# --- enumeración ---

def test_small_enumerations():
    assert enumerate_irreducible_balanced(1) == [BalancedVector(1, ((1, 1),))]
    assert enumerate_irreducible_balanced(2) == [
        BalancedVector(2, ((3, 1),)),
        BalancedVector(2, ((1, 1), (2, 1))),
    ]


@pytest.mark.parametrize("N", [1, 2, 3])
def test_cone_and_support_methods_agree(N):
    by_cone = enumerate_irreducible_balanced(N, method='cone')
    by_support = enumerate_irreducible_balanced(N, method='support')
    assert by_cone == by_support
    assert all(len(v.support) <= N for v in by_cone)


def test_unknown_method():
    with pytest.raises(ValueError):
        enumerate_irreducible_balanced(2, method='random')


@pytest.mark.parametrize("N,expected", [(1, 1), (2, 1), (3, 2)])
def test_complexity_bound_report(N, expected):
    report = verify_complexity_bound(N)
    assert report
    assert report.max_complexity == expected
    assert report.max_complexity <= report.max_determinant


def test_support_count_bound():
    assert support_count_bound(2) == 3 + 3
    assert support_count_bound(3) == 7 + 21 + 35


# --- determinantes ---

@pytest.mark.parametrize("N,expected", [(1, 1), (2, 1), (3, 2), (4, 3)])
def test_max_zero_one_determinant(N, expected):
    assert max_zero_one_determinant(N) == expected


@pytest.mark.parametrize("N", [1, 2, 3])
def test_determinant_distribution(N):
    assert determinant_distribution_check(N)


def test_row_operations_on_every_3x3_matrix():
    for entries in product((0, 1), repeat=9):
        A = [list(entries[r * 3:(r + 1) * 3]) for r in range(3)]
        for i in (1, 2, 3):
            assert row_operation_check(A, i, signs=0b101), f"falla en A={A}, i={i}"


def test_row_operation_preconditions():
    with pytest.raises(ParamOutOfRange):
        row_operation_check([[0, 2], [1, 1]], 1)
    with pytest.raises(ParamOutOfRange):
        row_operation_check([[0, 1], [1, 1]], 3)


def test_linear_congruential_is_reproducible():
    a, b = LinearCongruential(42), LinearCongruential(42)
    assert [a.next() for _ in range(5)] == [b.next() for _ in range(5)]
    assert all(0 <= a.below(7) < 7 for _ in range(100))
    assert all(v in (0, 1) for row in a.zero_one_matrix(4) for v in row)


def test_determinant_experiment_is_seeded():
    first = determinant_experiment(3, 200, seed=11)
    assert first == determinant_experiment(3, 200, seed=11)
    assert sum(count for _, count in first.histogram) == 200
    assert dict(first.histogram).get(0, 0) == first.singular_count
    assert first.max_abs_det <= 2
    assert first.csv_row() == {
        'N': 3, 'trials': 200, 'seed': 11,
        'singular_count': first.singular_count, 'max_abs_det': first.max_abs_det,
    }
    with pytest.raises(ParamOutOfRange):
        determinant_experiment(3, 0)


def test_z_irreducible_search():
    result = z_irreducible_search(3, 60, seed=3)
    assert result.found
    assert result.bound_holds
    for M in result.found:
        assert balance_of(M.to_vector()) is not None
        assert is_z_irreducible(M)
    assert result == z_irreducible_search(3, 60, seed=3)
