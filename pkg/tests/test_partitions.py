from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import enumerate_ssyt, weyl_dimension
from segre_syzygies.partitions import (
    check_partition,
    conjugate,
    contains,
    diagonal_length,
    enumerate_partitions,
    extend_columns,
    schur_dimension,
    shifted_diagonal_length,
    weight,
)


def all_partitions(max_weight, max_height=None, max_width=None):
    for w in range(max_weight + 1):
        yield from enumerate_partitions(
            w, max_height if max_height is not None else w, max_width or w
        )


partitions_st = st.integers(0, 12).flatmap(
    lambda w: st.sampled_from(enumerate_partitions(w, w, w) or [()])
)


def test_check_partition_rejects_bad_rows():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))
    assert check_partition((3, 1)) == (3, 1)


def test_conjugate_known_values():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((5, 4, 4, 2)) == (4, 4, 3, 3, 1)
    # fixes the transpose convention used throughout
    assert conjugate((6, 5, 5, 2)) == (4, 4, 3, 3, 3, 1)


@given(partitions_st)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert weight(conjugate(lam)) == weight(lam)


def test_diagonal_length():
    assert diagonal_length(()) == 0
    assert diagonal_length((2, 1)) == 1
    assert diagonal_length((2, 2)) == 2


def test_shifted_diagonal_length_known_values():
    assert shifted_diagonal_length((5, 4, 4, 2), -2, -1) == 4
    assert shifted_diagonal_length((), -1, 1) == 1
    assert shifted_diagonal_length((), 0, 0) == 0
    # downward shifts along the diagonal just shorten it
    assert shifted_diagonal_length((3, 3, 2), 1, 1) == diagonal_length((3, 3, 2)) - 1


def test_shifted_diagonal_length_specializes_to_diagonal():
    for lam in all_partitions(12):
        assert shifted_diagonal_length(lam, 0, 0) == diagonal_length(lam)


def test_extend_columns_known_values():
    assert extend_columns((5, 4, 4, 2), 2) == (5, 4, 4, 2, 2)
    assert extend_columns((4, 4, 3, 3, 1), 3) == (4, 4, 3, 3, 3, 1)
    assert extend_columns((3, 1), 0) == (3, 1)
    assert extend_columns((), 2) == (2,)


@given(partitions_st, st.integers(0, 12))
def test_extend_columns_adds_weight(lam, k):
    out = extend_columns(lam, k)
    assert weight(out) == weight(lam) + k
    check_partition(out)


def test_schur_dimension_known_values():
    assert schur_dimension((2, 1), 3) == 8
    assert schur_dimension((2, 2, 2), 4) == 10
    for d in range(1, 6):
        for k in range(0, d + 1):
            assert schur_dimension((1,) * k, d) == comb(d, k)
    assert schur_dimension((1, 1, 1), 2) == 0


def test_schur_dimension_against_tableau_enumeration():
    for lam in all_partitions(8):
        for d in range(1, 6):
            assert schur_dimension(lam, d) == enumerate_ssyt(lam, d)


def test_schur_dimension_against_weyl_product():
    for lam in all_partitions(8):
        for d in range(1, 6):
            assert schur_dimension(lam, d) == weyl_dimension(lam, d)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cauchy_dimension_identity(m, n):
    for w in range(m * n + 1):
        total = sum(
            schur_dimension(lam, m) * schur_dimension(conjugate(lam), n)
            for lam in enumerate_partitions(w, m, n)
        )
        assert total == comb(m * n, w)


def test_enumerate_partitions():
    assert enumerate_partitions(2, 2, 3) == [(2,), (1, 1)]
    assert enumerate_partitions(0, 3, 3) == [()]
    assert enumerate_partitions(4, 2, 2) == [(2, 2)]


def test_enumerate_partitions_is_exhaustive_and_ordered():
    for w in range(9):
        out = enumerate_partitions(w, 4, 5)
        assert len(set(out)) == len(out)
        assert out == sorted(out, reverse=True)
        for lam in out:
            check_partition(lam)
            assert weight(lam) == w
            assert len(lam) <= 4 and (not lam or lam[0] <= 5)


def test_box_membership_convention():
    lam = (3, 1)
    assert contains(lam, 2, 0) and not contains(lam, 3, 0)
    assert contains(lam, 0, 1) and not contains(lam, 1, 1)
    assert not contains(lam, -1, 0) and not contains(lam, 0, -1)
