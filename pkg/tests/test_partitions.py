from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from invhilbert.partitions import (
    conjugate,
    contains,
    enumerate_partitions,
    format_partition,
    hook_dimension,
    make_partition,
    parse_partition,
    partition_index,
    partitions_inside,
    z_factor,
)
from oracles import count_standard_tableaux, partition_counts
from strategies import partitions


def test_enumerate_examples():
    assert enumerate_partitions(4, 2) == [(4,), (3, 1), (2, 2)]
    assert enumerate_partitions(0, 5) == [()]
    assert len(enumerate_partitions(5)) == 7


def test_enumeration_is_lexicographically_decreasing():
    for n in range(12):
        parts = enumerate_partitions(n)
        assert parts == sorted(parts, reverse=True)
        assert len(set(parts)) == len(parts)


def test_counts_match_pentagonal_recurrence():
    assert [len(enumerate_partitions(n)) for n in range(61)] == partition_counts(60)


def test_row_bound_nesting():
    for n in range(21):
        for k in range(1, 6):
            assert set(enumerate_partitions(n, k)) <= set(enumerate_partitions(n, k + 1))
            assert all(len(p) <= k for p in enumerate_partitions(n, k))


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((2, 2)) == (2, 2)


@given(partitions(20))
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_hook_dimension_examples():
    assert hook_dimension((5,)) == 1
    assert hook_dimension((1, 1, 1)) == 1
    assert hook_dimension((2, 1)) == count_standard_tableaux((2, 1)) == 2


@given(partitions(12))
def test_hook_dimension_counts_standard_tableaux(lam):
    assert hook_dimension(lam) == count_standard_tableaux(lam)
    assert hook_dimension(lam) == hook_dimension(conjugate(lam))


@pytest.mark.parametrize("n", range(11))
def test_wedderburn(n):
    assert sum(hook_dimension(lam) ** 2 for lam in enumerate_partitions(n)) == factorial(n)


def test_make_partition_validation():
    assert make_partition([3, 1, 0]) == (3, 1)
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, -1])


@given(partitions(15))
def test_parse_format_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


def test_index_and_inside():
    idx = partition_index(6)
    assert all(enumerate_partitions(6)[i] == p for p, i in idx.items())
    inside = partitions_inside((3, 2), 3)
    assert inside == [p for p in enumerate_partitions(3) if contains((3, 2), p)]
    assert inside == [(3,), (2, 1)]


@given(st.integers(0, 9))
def test_z_factor_sums_to_one_over_classes(n):
    # sum over classes of 1/z_rho = 1
    assert sum(Fraction(1, z_factor(rho)) for rho in enumerate_partitions(n)) == 1
