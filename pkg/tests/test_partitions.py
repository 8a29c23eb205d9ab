import pytest
from hypothesis import given, strategies as st

from qabel.partitions import (
    EMPTY,
    Partition,
    adjoin,
    conjugate,
    is_gap_free,
    mu_p,
    multiplicity_of_largest,
    partitions_of,
    partitions_up_to,
    partitions_with_parts_at_least,
)

# p(n), n = 0..20
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]

partition_strategy = st.lists(st.integers(1, 12), max_size=10).map(Partition.from_parts)


def test_counts_match_partition_numbers():
    assert [sum(1 for _ in partitions_of(n)) for n in range(21)] == PARTITION_NUMBERS


def test_decreasing_lex_order():
    got = [p.parts for p in partitions_of(5)]
    assert got == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]
    assert got == sorted(got, reverse=True)


def test_zero_yields_only_the_empty_partition():
    assert list(partitions_of(0)) == [EMPTY]
    with pytest.raises(ValueError):
        list(partitions_of(-1))


def test_conventions_for_empty_partition():
    assert EMPTY.size == EMPTY.length == EMPTY.smallest == EMPTY.largest == 0
    assert mu_p(EMPTY) == 1


def test_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert Partition.from_parts([1, 3, 2]).parts == (3, 2, 1)


def test_mu_p_values():
    assert mu_p(Partition((3, 1))) == 1
    assert mu_p(Partition((3, 2, 1))) == -1
    assert mu_p(Partition((2, 2))) == 0


def test_mu_p_generating_function_is_euler_product():
    # sum_lambda mu_P(lambda) q^|lambda| = (q;q)_oo: pentagonal coefficients
    pent = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]
    assert [sum(mu_p(p) for p in partitions_of(n)) for n in range(16)] == pent


@given(partition_strategy)
def test_conjugation_is_an_involution(lam):
    c = conjugate(lam)
    assert conjugate(c) == lam
    assert c.size == lam.size
    assert c.largest == lam.length and c.length == lam.largest


@given(partition_strategy, st.integers(1, 15))
def test_adjoin(lam, n):
    new = adjoin(lam, n)
    assert new.size == lam.size + n
    assert sorted(new.parts) == sorted(lam.parts + (n,))


def test_adjoin_rejects_nonpositive():
    with pytest.raises(ValueError):
        adjoin(EMPTY, 0)


@given(partition_strategy)
def test_distinct_parts_conjugate_to_gap_free(lam):
    # distinct parts <-> every integer below the largest part occurs
    if not lam.has_repeated_part():
        g = conjugate(lam)
        assert is_gap_free(g)
        assert multiplicity_of_largest(g) == lam.smallest


def test_up_to_and_min_part_generators():
    assert sum(1 for _ in partitions_up_to(10)) == sum(PARTITION_NUMBERS[:11])
    got = sorted(p.parts for p in partitions_with_parts_at_least(8, 3))
    want = sorted(p.parts for p in partitions_up_to(8) if p.parts and p.smallest >= 3)
    assert got == want
