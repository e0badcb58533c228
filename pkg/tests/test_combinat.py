from collections import Counter
from itertools import permutations as itperms
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qthook.combinat import (binary_trees, bst_insert, comp_descents, comp_finer, comp_maj,
                             compositions, decreasing_plane_tree, descent_composition, descents,
                             evaluation, finer, inverse, is_packed, is_regular, maj, pack,
                             packed_words, plane_class, plane_trees, refinement_interval, regions,
                             regular_signed_packed_words, shuffles, signed_std, signed_Std, spack, std,
                             sylvester_class, tree_size)

words = st.lists(st.integers(1, 5), min_size=1, max_size=7).map(tuple)


def test_std_and_signed_std():
    assert std((3, 1, 3, 2)) == (3, 1, 4, 2)
    # barred letters sort below unbarred ones, in reverse order of their values
    assert signed_std((2, -1, -3, 1)) == (4, 2, 1, 3)
    assert signed_Std((2, -1, -3, 1)) == ((3, 1, 4, 2), (1, -1, -1, 1))


@given(words)
def test_std_is_a_permutation_with_same_descents(w):
    s = std(w)
    assert sorted(s) == list(range(1, len(w) + 1))
    assert descents(s) == descents(w)


@given(words)
def test_pack(w):
    p = pack(w)
    assert is_packed(p)
    assert std(p) == std(w)


def test_descents_and_maj():
    assert descents((4, 1, 3, 2)) == (1, 3)
    assert maj((4, 1, 3, 2)) == 4
    assert descent_composition((4, 1, 3, 2)) == (1, 2, 1)
    assert comp_descents((1, 2, 1)) == (1, 3)
    assert comp_maj((2, 1, 3)) == 5


def test_spack_example():
    w = (5, -1, -2, -1, 3, 5, -4, -4, 6, -1)
    assert is_regular(w)
    assert spack(w) == (2, 1, 1, 1, 1, 2, 2, 2, 3, 1)


def test_counts():
    assert [len(list(compositions(n))) for n in range(1, 6)] == [1, 2, 4, 8, 16]
    # ordered Bell numbers
    assert [len(packed_words(n)) for n in range(6)] == [1, 1, 3, 13, 75, 541]
    assert [sum(1 for _ in binary_trees(n)) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [sum(1 for _ in regular_signed_packed_words(n)) for n in range(5)] == [1, 2, 10, 74, 730]
    # plane trees with n regions: little Schroeder numbers
    assert [len(plane_trees(n)) for n in range(1, 6)] == [1, 3, 11, 45, 197]


def test_finer_and_intervals():
    assert {v for v in packed_words(3) if finer(v, (1, 2, 1))} == {(1, 2, 1), (1, 3, 2), (2, 3, 1)}
    assert refinement_interval((1, 1, 1), (1, 2, 3)) == {(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)}
    with pytest.raises(ValueError):
        refinement_interval((1, 2), (2, 1))
    assert comp_finer((1, 1, 2), (2, 2))


def test_evaluation():
    assert evaluation((1, 1, 2, 3, 3, 3, 3, 4, 4)) == (2, 1, 4, 2)


def test_sylvester_classes_partition():
    for n in range(1, 6):
        seen = Counter()
        for T in binary_trees(n):
            cls = sylvester_class(T)
            assert all(bst_insert(s) == T for s in cls)
            seen.update(cls)
        assert len(seen) == factorial(n) and max(seen.values()) == 1


def test_bst_insert_sizes():
    for s in itperms(range(1, 5)):
        assert tree_size(bst_insert(s)) == 4


def test_plane_classes_partition():
    for n in range(1, 5):
        total = Counter()
        for T in plane_trees(n):
            cls = plane_class(T)
            assert all(decreasing_plane_tree(u) == T for u in cls)
            assert all(regions(T) == len(u) for u in cls)
            total.update(cls)
        assert set(total) == set(packed_words(n))


def test_shuffles():
    got = list(shuffles((1, 2), (3, 4, 5)))
    assert len(got) == comb(5, 2) and len(set(got)) == len(got)


def test_inverse():
    assert inverse((4, 1, 3, 2)) == (2, 4, 3, 1)
