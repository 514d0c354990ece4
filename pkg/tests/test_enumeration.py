import itertools

import pytest
from hypothesis import given, settings, strategies as st

from macfill.core import big_basement, column_sets, compositions, longest_word
from macfill.enumeration import brute_force, enumerate_fillings, reconstruct, reconstruct_greedy
from macfill.stats import coinv, is_attacking, is_coinversion_free, is_inversion_free, maj

from fixtures import EX22, EX22_BASEMENT


def test_example_naf_set():
    got = list(enumerate_fillings("naf", (1, 0, 2, 2), EX22_BASEMENT))
    assert sorted(got, key=lambda F: F.rows) == sorted(EX22, key=lambda F: F.rows)
    free = list(enumerate_fillings("coinvfree", (1, 0, 2, 2), EX22_BASEMENT))
    assert len(free) == 4 and all(coinv(F) == 0 for F in free)


def test_class_basement_mismatch_is_rejected():
    with pytest.raises(ValueError):
        list(enumerate_fillings("invfree", (1, 1), (2, 1)))
    with pytest.raises(ValueError):
        list(enumerate_fillings("naf", (1, 1), big_basement((2, 1))))


@settings(max_examples=40)
@given(st.sampled_from(["naf", "coinvfree", "invfree", "fil"]),
       st.lists(st.integers(0, 2), min_size=1, max_size=3), st.randoms())
def test_search_agrees_with_brute_force(cls, alpha, rnd):
    n = len(alpha)
    perm = list(range(1, n + 1))
    rnd.shuffle(perm)
    basement = big_basement(perm) if cls in ("invfree", "fil") else tuple(perm)
    fast = sorted(F.rows for F in enumerate_fillings(cls, alpha, basement))
    slow = sorted(F.rows for F in brute_force(cls, alpha, basement))
    assert fast == slow


def test_empty_inversion_free_example():
    # alpha_1 < alpha_2 with rank_1 > rank_2 leaves nothing
    assert list(enumerate_fillings("invfree", (0, 1), big_basement((2, 1)))) == []
    # the same shape with ranks (1, 2) is not empty
    assert list(enumerate_fillings("invfree", (0, 1), big_basement((1, 2))))


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 1, 1), (2, 2, 1)])
def test_greedy_and_general_reconstruct_round_trip(lam):
    w0 = longest_word(len(lam))
    for F in enumerate_fillings("coinvfree", lam, w0):
        cols = column_sets(F)
        assert reconstruct_greedy(cols, lam) == F
        assert reconstruct("coinvfree", cols, lam, w0) == F


def test_invfree_members_are_inversion_free():
    for perm in itertools.permutations((1, 2, 3)):
        for F in enumerate_fillings("invfree", (2, 0, 1), big_basement(perm)):
            assert is_inversion_free(F)


def test_coinvfree_members_do_not_attack():
    for F in enumerate_fillings("coinvfree", (1, 2, 2), (2, 3, 1)):
        assert is_coinversion_free(F) and not is_attacking(F)
        assert maj(F) >= 0


def _has_reversed_pair(alpha, ranks):
    n = len(alpha)
    return any(alpha[i] < alpha[j] and ranks[i] > ranks[j] for i in range(n) for j in range(i + 1, n))


def test_inversion_free_emptiness_is_characterized_by_rank_reversals():
    checked = 0
    for n in range(1, 5):
        for size in range(0, 5):
            for alpha in compositions(size, n):
                for perm in itertools.permutations(range(1, n + 1)):
                    first = next(iter(enumerate_fillings("invfree", alpha, big_basement(perm))), None)
                    assert (first is None) == _has_reversed_pair(alpha, perm), (alpha, perm)
                    checked += 1
    assert checked > 1000


def test_same_direction_pairs_do_not_force_emptiness():
    # alpha_1 < alpha_2 with rank_1 < rank_2 still admits fillings
    assert not _has_reversed_pair((0, 1), (1, 2))
    assert list(enumerate_fillings("invfree", (0, 1), big_basement((1, 2))))
