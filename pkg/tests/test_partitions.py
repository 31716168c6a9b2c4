"""Tests for partition enumeration and good partitions."""

import pytest
import sympy

from services.partitions import (
    Partition,
    enumerate_partitions,
    good_partitions,
    is_good_partition,
    partition_count,
    strip_common_parts,
)
from utils.exceptions import InvalidInputError


def parts_of(partitions):
    return [p.parts for p in partitions]


def test_enumerate_small():
    assert parts_of(enumerate_partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert parts_of(enumerate_partitions(1)) == [(1,)]
    assert len(enumerate_partitions(4)) == 5


def test_enumeration_is_reverse_lexicographic():
    parts = parts_of(enumerate_partitions(8))
    assert parts == sorted(parts, reverse=True)
    assert parts[0] == (8,)
    assert parts[-1] == (1,) * 8


@pytest.mark.parametrize("n", range(1, 21))
def test_enumeration_matches_count(n):
    partitions = enumerate_partitions(n)
    assert len(partitions) == partition_count(n)
    assert len(set(parts_of(partitions))) == len(partitions)
    for p in partitions:
        assert p.n == n
        assert is_good_partition(list(p.parts), n)


@pytest.mark.parametrize("n", [1, 3, 10, 20, 50, 100])
def test_partition_count_matches_sympy(n):
    assert partition_count(n) == int(sympy.npartitions(n))


def test_partition_count_values():
    assert partition_count(1) == 1
    assert partition_count(3) == 3
    assert partition_count(10) == 42


@pytest.mark.parametrize("bad", [0, -3])
def test_non_positive_n_rejected(bad):
    with pytest.raises(InvalidInputError):
        enumerate_partitions(bad)
    with pytest.raises(InvalidInputError):
        partition_count(bad)


def test_good_partitions_are_partitions():
    assert good_partitions(6) == enumerate_partitions(6)


def test_is_good_partition():
    assert is_good_partition([2, 1], 3)
    assert is_good_partition([1, 2], 3)
    assert not is_good_partition([3, 0], 3)
    assert not is_good_partition([1, 1], 3)
    with pytest.raises(InvalidInputError):
        is_good_partition([], 3)


def test_partition_validation():
    with pytest.raises(InvalidInputError):
        Partition(())
    with pytest.raises(InvalidInputError):
        Partition((1, 2))
    with pytest.raises(InvalidInputError):
        Partition((2, 0))
    assert Partition.canonical([1, 3, 2]).parts == (3, 2, 1)
    assert str(Partition((4, 1))) == "(4,1)"
    assert Partition((4, 4, 3)).length == 3


def test_strip_common_parts():
    assert strip_common_parts(Partition((4, 4, 3)), Partition((5, 4, 2))) == ((4, 3), (5, 2))
    assert strip_common_parts(Partition((2, 1)), Partition((2, 1))) == ((), ())
    assert strip_common_parts(Partition((8, 6)), Partition((12, 2))) == ((8, 6), (12, 2))


def test_strip_common_parts_is_symmetric():
    partitions = enumerate_partitions(7)
    for a in partitions:
        for b in partitions:
            left, right = strip_common_parts(a, b)
            assert strip_common_parts(b, a) == (right, left)
            assert sum(left) == sum(right)
            assert not set(left) & set(right)
