import pytest

from zclass.combinatorics import (Partition, enumerate_partitions,
                                  partition_count, partition_counts_upto)

# p(0) .. p(20), Euler's table
P_TABLE = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231,
           297, 385, 490, 627]


def test_partition_count_table():
    assert [partition_count(n) for n in range(21)] == P_TABLE
    assert partition_counts_upto(20) == tuple(P_TABLE)


def test_partition_count_examples():
    assert partition_count(0) == 1
    assert partition_count(5) == 7
    assert partition_count(10) == 42


def test_partition_count_negative():
    with pytest.raises(ValueError):
        partition_count(-1)


def test_enumerate_zero():
    assert enumerate_partitions(0) == [Partition(())]


def test_enumerate_matches_count():
    for n in range(12):
        parts = enumerate_partitions(n)
        assert len(parts) == partition_count(n)
        assert len(set(parts)) == len(parts)
        for lam in parts:
            assert lam.weight == n


def test_enumerate_order_largest_first():
    parts = enumerate_partitions(4)
    assert parts[0] == Partition((4,))
    assert parts[-1] == Partition((1, 1, 1, 1))


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition((-1,))


def test_partition_multiplicities():
    lam = Partition((3, 2, 2, 1))
    assert lam.weight == 8
    assert lam.multiplicities() == {3: 1, 2: 2, 1: 1}
    assert len(lam) == 4
    assert list(lam) == [3, 2, 2, 1]
