#!/usr/bin/env python3
"""
Tests del núcleo: subconjuntos, pares cercanos, SetFunction, chequeos de
supermodularidad y vértices de permutoedros generalizados.
"""

import sys
from fractions import Fraction
from itertools import permutations, product
from pathlib import Path

import pytest
from hypothesis import assume, given, settings

sys.path.insert(0, str(Path(__file__).parent.parent))

from GenPerm.core import (
    ClosePair, SetFunction, canonical_subsets, close_pair_index, close_pairs,
    discrete_derivative, elements_of, equivalent, gp_vertices, in_polytope,
    is_constant, is_modular, is_standard, is_supermodular, is_supermodular_full,
    make_close_pair, mask_from_elements, modular, modular_part,
    permutohedron_from_point, second_derivative_check, standardize,
    supermodularity_value,
)
from GenPerm.errors import (
    ElementOutOfRange, FormatError, GenPermError, GroundSetOutOfRange,
    MismatchedGroundSet, ModularInput, NotSupermodular, UnsortedInput,
)
from tests.strategies import set_functions, supermodular_functions, threshold


# --- subconjuntos y pares cercanos ---

def test_canonical_order_is_cardinality_then_value():
    """∅, {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}."""
    assert canonical_subsets(3) == (0, 1, 2, 4, 3, 5, 6, 7)


def test_mask_roundtrip_and_range():
    assert mask_from_elements([1, 3], 3) == 0b101
    assert elements_of(0b101) == [1, 3]
    with pytest.raises(ElementOutOfRange):
        mask_from_elements([4], 3)
    with pytest.raises(ElementOutOfRange):
        mask_from_elements([0], 3)


@pytest.mark.parametrize("n,expected", [(2, 1), (3, 6), (4, 24), (5, 80)])
def test_close_pair_count(n, expected):
    """C(n,2)·2^(n-2) pares cercanos."""
    assert len(close_pairs(n)) == expected


def test_close_pairs_need_two_elements():
    with pytest.raises(GroundSetOutOfRange):
        close_pairs(1)
    with pytest.raises(GroundSetOutOfRange):
        close_pairs(17)


def test_close_pair_properties():
    pair = ClosePair(meet=0b100, a=1, b=2)
    assert pair.left == 0b101
    assert pair.right == 0b110
    assert pair.join == 0b111
    assert pair.layer == 2
    assert str(pair) == "({1,3}, {2,3})"


def test_make_close_pair_normalizes_order():
    assert make_close_pair(0, 3, 1) == ClosePair(0, 1, 3)
    with pytest.raises(ElementOutOfRange):
        make_close_pair(0, 2, 2)


def test_close_pair_index_matches_order():
    index = close_pair_index(4)
    assert [index[p] for p in close_pairs(4)] == list(range(24))


# --- SetFunction ---

def test_set_function_validates_length_and_values():
    with pytest.raises(MismatchedGroundSet):
        SetFunction(2, (0, 0, 0))
    with pytest.raises(FormatError):
        SetFunction(1, (0, 0.5))
    with pytest.raises(GroundSetOutOfRange):
        SetFunction.zeros(17)


def test_set_function_arithmetic_is_exact():
    f = SetFunction(1, ("1/3", 1))
    g = (f + f).scale(Fraction(3, 2))
    assert g.values == (Fraction(1), Fraction(3))
    assert (f - f).is_zero()
    assert f.shift(1).at(1) == 2
    with pytest.raises(MismatchedGroundSet):
        f + SetFunction.zeros(2)


def test_modular_part_recovers_modular_function():
    f = modular([1, 2, 3], base=5)
    assert is_modular(f)
    assert f.full == 11
    assert modular_part(f).to_set_function() == f


def test_empty_ground_set_is_allowed():
    f = SetFunction(0, (7,))
    assert is_supermodular(f)
    assert is_modular(f)
    assert is_constant(f)


# --- chequeos ---

def test_threshold_is_supermodular_but_not_modular():
    f = threshold(3, 0b111, 1)
    assert is_supermodular(f)
    assert not is_modular(f)
    assert supermodularity_value(f, ClosePair(0, 1, 2)) == 1


def test_submodular_function_is_rejected():
    f = SetFunction.by_cardinality(3, lambda k: min(k, 1))
    assert not is_supermodular(f)
    with pytest.raises(NotSupermodular):
        standardize(f)


def test_standardize_modular_input():
    with pytest.raises(ModularInput):
        standardize(modular([1, 1, 1]))


@settings(max_examples=40, deadline=None)
@given(set_functions())
def test_close_pair_check_matches_full_check(f):
    """Los pares cercanos bastan para decidir supermodularidad."""
    assert is_supermodular(f) == is_supermodular_full(f) == second_derivative_check(f)


@pytest.mark.parametrize("alphabet", [(0, 1), (-1, 1)])
def test_supermodularity_checks_agree_on_all_n3_sign_patterns(alphabet):
    for values in product(alphabet, repeat=8):
        f = SetFunction(3, values)
        assert is_supermodular(f) == is_supermodular_full(f) == second_derivative_check(f), values


@settings(max_examples=40, deadline=None)
@given(supermodular_functions())
def test_generated_functions_are_supermodular(f):
    assert is_supermodular(f)
    assert is_supermodular_full(f)


@settings(max_examples=30, deadline=None)
@given(supermodular_functions())
def test_standardize_is_a_class_invariant(f):
    """Escalar por un positivo y sumar algo modular no cambian el representante."""
    assume(not is_modular(f))
    std = standardize(f)
    assert is_standard(std)
    assert standardize(f.scale(3) + modular(range(f.n), base=2)) == std
    assert standardize(std) == std


def test_equivalent_differs_by_modular():
    f = threshold(3, 0b111, 1)
    assert equivalent(f, f + modular([4, -1, "1/2"]))
    assert not equivalent(f, f.scale(2))
    with pytest.raises(MismatchedGroundSet):
        equivalent(f, SetFunction.zeros(2))


def test_discrete_derivative_of_square():
    """∂_1 |I|^2 = 2|I| + 1 sobre [n] \\ {1}."""
    f = SetFunction.by_cardinality(3, lambda k: k * k)
    assert discrete_derivative(f, 1) == SetFunction.by_cardinality(2, lambda k: 2 * k + 1)
    with pytest.raises(ElementOutOfRange):
        discrete_derivative(f, 4)


# --- permutoedros generalizados ---

def test_permutohedron_vertices_are_permutations():
    f = permutohedron_from_point([0, 1, 2])
    vertices = gp_vertices(f)
    expected = sorted({tuple(Fraction(v) for v in p) for p in permutations((0, 1, 2))})
    assert vertices == expected
    assert all(in_polytope(f, v) for v in vertices)
    assert not in_polytope(f, (1, 1, 2))


def test_permutohedron_needs_sorted_point():
    with pytest.raises(UnsortedInput):
        permutohedron_from_point([2, 1])


def test_gp_vertices_preconditions():
    with pytest.raises(GenPermError):
        gp_vertices(threshold(3, 0b111, 1).shift(1))
    with pytest.raises(NotSupermodular):
        gp_vertices(SetFunction.by_cardinality(3, lambda k: min(k, 1)))


@settings(max_examples=20, deadline=None)
@given(supermodular_functions(max_n=4))
def test_greedy_vertices_lie_in_polytope(f):
    f = f.shift(-f(0))
    for v in gp_vertices(f):
        assert in_polytope(f, v), f"vértice {v} fuera del permutoedro de {f}"
