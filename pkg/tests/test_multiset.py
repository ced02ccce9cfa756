"""Tests for the integer multiset type."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from srlaguerre.multiset import (
    ContainmentViolation,
    IntMultiset,
    OutOfRange,
    disjoint_union,
    kappa,
    strict_difference,
)


def test_basic_construction():
    m = IntMultiset([4, 5, 4])
    assert m.cardinality == 3
    assert m.multiplicity(4) == 2
    assert m.multiplicity(5) == 1
    assert m.multiplicity(6) == 0
    assert 4 in m and 6 not in m
    assert sorted(m) == [4, 4, 5]
    assert m.support() == (4, 5)


def test_empty():
    m = IntMultiset()
    assert m.cardinality == 0
    assert len(m) == 0
    assert m == IntMultiset([])


def test_from_pairs():
    m = IntMultiset.from_pairs([(3, 2), (7, 1)])
    assert m == IntMultiset([3, 3, 7])


def test_disjoint_union():
    a = IntMultiset([1, 2, 2])
    b = IntMultiset([2, 3])
    assert disjoint_union(a, b) == IntMultiset([1, 2, 2, 2, 3])
    assert (a | b) == disjoint_union(a, b)


def test_strict_difference():
    a = IntMultiset([1, 2, 2, 3])
    b = IntMultiset([2, 3])
    assert strict_difference(a, b) == IntMultiset([1, 2])
    assert (a - b) == IntMultiset([1, 2])


def test_strict_difference_raises_on_missing_value():
    with pytest.raises(ContainmentViolation):
        strict_difference(IntMultiset([1]), IntMultiset([2]))


def test_strict_difference_raises_on_excess_multiplicity():
    with pytest.raises(ContainmentViolation):
        strict_difference(IntMultiset([2]), IntMultiset([2, 2]))


def test_kappa_reflects():
    m = IntMultiset([1, 1, 3])
    assert kappa(4, m) == IntMultiset([3, 3, 1])


def test_kappa_out_of_range():
    with pytest.raises(OutOfRange):
        kappa(4, IntMultiset([4]))
    with pytest.raises(OutOfRange):
        kappa(4, IntMultiset([5]))


def test_text_round_trip():
    m = IntMultiset([4, 4, 5])
    assert m.to_text() == "{4^2,5}"
    assert IntMultiset.from_text(m.to_text()) == m
    assert IntMultiset.from_text("{}") == IntMultiset()


def test_json_round_trip():
    m = IntMultiset([9, 9, 9, 2])
    assert IntMultiset.from_json(m.to_json()) == m


@given(st.lists(st.integers(min_value=1, max_value=9)))
def test_union_then_difference_is_identity(values):
    a = IntMultiset(values)
    b = IntMultiset([1, 2, 3])
    assert (a | b) - b == a


@given(st.lists(st.integers(min_value=1, max_value=9)))
def test_kappa_is_involution(values):
    m = IntMultiset(values)
    assert kappa(10, kappa(10, m)) == m


@given(st.lists(st.integers(min_value=1, max_value=9)),
       st.lists(st.integers(min_value=1, max_value=9)))
def test_union_cardinality_adds(left, right):
    a, b = IntMultiset(left), IntMultiset(right)
    assert (a | b).cardinality == a.cardinality + b.cardinality
