from math import comb

import pytest

from segre_syzygies.marked_diagrams import (
    MarkedDiagram,
    enumerate_marked_diagrams,
    lr_markable_boxes,
    marked_diagrams_with_pair,
    strip_decomposition,
)
from segre_syzygies.partitions import (
    conjugate,
    diagonal_length,
    enumerate_partitions,
    extend_columns,
    schur_dimension,
    weight,
)


def test_shapes_of_marked_diagrams():
    d = MarkedDiagram((1,), frozenset({(1, 0)}), frozenset({(1, 0)})).validate()
    assert d.u_shape() == (2,)
    assert d.v_shape() == (1, 1)

    d = MarkedDiagram((), frozenset(), frozenset()).validate()
    assert d.weight_pair() == ((), ())

    d = MarkedDiagram((1,), frozenset({(0, 1)}), frozenset({(0, 1)})).validate()
    assert d.u_shape() == (1, 1)
    assert d.v_shape() == (2,)


def test_validate_rejects_bad_diagrams():
    with pytest.raises(ValueError):
        # two L marks in one column
        MarkedDiagram((2,), frozenset({(0, 1), (0, 2)}), frozenset()).validate()
    with pytest.raises(ValueError):
        # strip overlaps the core
        MarkedDiagram((2,), frozenset({(0, 0)}), frozenset()).validate()
    with pytest.raises(ValueError):
        # detached box
        MarkedDiagram((1,), frozenset({(2, 0)}), frozenset()).validate()


def test_json_round_trip():
    d = MarkedDiagram((2, 1), frozenset({(2, 0)}), frozenset({(0, 2)})).validate()
    assert MarkedDiagram.from_json(d.to_json()) == d


def test_lr_markable_boxes_known_values():
    assert lr_markable_boxes((5, 4, 4, 2, 2), (4, 4, 3, 3, 3, 1)) == frozenset()
    assert lr_markable_boxes((2,), (2,)) == frozenset({(0, 0)})
    assert lr_markable_boxes((), (3, 1)) == frozenset()
    assert lr_markable_boxes((2, 1), (2, 1)) == frozenset({(1, 0), (0, 1)})


def test_lr_markable_boxes_inside_intersection():
    for lam in enumerate_partitions(4, 4, 4) + enumerate_partitions(3, 3, 3):
        for mu in enumerate_partitions(4, 4, 4):
            mu_c = conjugate(mu)
            for x, y in lr_markable_boxes(lam, mu):
                assert lam[y] > x and mu_c[y] > x


def test_markable_boxes_empty_for_diagonal_extensions():
    # the diagonal-extension pairs that make up the untwisted tables
    for w in range(9):
        for nu in enumerate_partitions(w, w, w):
            s = diagonal_length(nu)
            lam = extend_columns(nu, s)
            mu = extend_columns(conjugate(nu), s)
            assert lr_markable_boxes(lam, mu) == frozenset()


def test_strip_decomposition_examples():
    core, l_strip, r_strip, valid = strip_decomposition(((1, 1), (1, 1)))
    assert (core, l_strip, r_strip, valid) == (
        (1,),
        frozenset({(0, 1)}),
        frozenset({(1, 0)}),
        True,
    )

    core, l_strip, r_strip, valid = strip_decomposition(
        ((5, 4, 4, 2, 2), (4, 4, 3, 3, 3, 1))
    )
    assert core == (5, 4, 4, 2)
    assert len(l_strip) == 2 and len(r_strip) == 3
    assert valid

    core, l_strip, r_strip, valid = strip_decomposition(((2, 1), (2, 1)))
    assert core == (2, 1) and not l_strip and not r_strip and valid


def test_strip_decomposition_invalid_pairs():
    # conjugate((1,1,1)) = (3,) adds two R marks in the first row
    _, _, _, valid = strip_decomposition(((1,), (1, 1, 1)))
    assert not valid
    # a two-column overhang needs two L marks in one column
    _, _, _, valid = strip_decomposition(((3, 3), (2, 1)))
    assert not valid


def test_enumeration_small_cases():
    assert len(enumerate_marked_diagrams(2, 2, 0, 0, 0)) == 1
    diagrams = enumerate_marked_diagrams(2, 2, 1, 1, 1)
    assert len(diagrams) == 4
    pairs = sorted(d.weight_pair() for d in diagrams)
    assert pairs == [
        ((1, 1), (1, 1)),
        ((1, 1), (2,)),
        ((2,), (1, 1)),
        ((2,), (2,)),
    ]
    dims = sum(
        schur_dimension(lam, 2) * schur_dimension(mu, 2) for lam, mu in pairs
    )
    assert dims == 16 == comb(4, 1) * 2 * 2


def dimension_identity(m, n, w, l, r):
    total = sum(
        schur_dimension(d.u_shape(), m) * schur_dimension(d.v_shape(), n)
        for d in enumerate_marked_diagrams(m, n, w, l, r)
    )
    expected = comb(m * n, w) * comb(m + l - 1, l) * comb(n + r - 1, r)
    return total, expected


@pytest.mark.parametrize("m,n", [(1, 1), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4)])
def test_dimension_identity(m, n):
    for w in range(9):
        for l in range(9 - w):
            for r in range(9 - w - l):
                total, expected = dimension_identity(m, n, w, l, r)
                assert total == expected, (m, n, w, l, r)


def test_diagrams_are_valid_and_distinct():
    diagrams = enumerate_marked_diagrams(3, 3, 2, 2, 1)
    assert len(set(diagrams)) == len(diagrams)
    for d in diagrams:
        d.validate()
        assert weight(d.core) == 2
        assert len(d.l_strip) == 2 and len(d.r_strip) == 1
        assert len(d.u_shape()) <= 3
        v_width = conjugate(d.v_shape())[0] if d.v_shape() else 0
        assert v_width <= 3


def test_same_pair_diagrams_are_markable_subsets():
    # inside one enumeration, diagrams sharing a weight pair carry a fixed
    # number j of double marks and realize every j-subset of the markable
    # boxes exactly once
    for m, n in [(2, 2), (2, 3), (3, 3)]:
        for w in range(5):
            for l in range(5 - w):
                for r in range(5 - w - l):
                    diagrams = enumerate_marked_diagrams(m, n, w, l, r)
                    groups: dict = {}
                    for d in diagrams:
                        groups.setdefault(d.weight_pair(), []).append(d)
                    for pair, group in groups.items():
                        assert group == marked_diagrams_with_pair(diagrams, pair)
                        _, l0, _, valid = strip_decomposition(pair)
                        assert valid
                        j = l - len(l0)
                        markable = lr_markable_boxes(*pair)
                        marked = {frozenset(d.l_strip & d.r_strip) for d in group}
                        assert all(len(s) == j and s <= markable for s in marked)
                        assert len(group) == len(marked) == comb(len(markable), j)


def test_pair_multiplicity_across_family_is_power_of_two():
    # summing over the compatible enumerations, the diagrams with a fixed
    # weight pair are in bijection with all subsets of the markable boxes
    m = n = 3
    for pair in [((2, 1), (2, 1)), ((2, 2), (2, 2)), ((3, 1), (2, 1, 1))]:
        core, l0, r0, valid = strip_decomposition(pair)
        assert valid
        markable = lr_markable_boxes(*pair)
        total = 0
        for j in range(len(markable) + 1):
            diagrams = enumerate_marked_diagrams(
                m, n, weight(core) - j, len(l0) + j, len(r0) + j
            )
            total += sum(1 for d in diagrams if d.weight_pair() == pair)
        assert total == 2 ** len(markable)
