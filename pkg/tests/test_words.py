import itertools

import pytest
from hypothesis import given, strategies as st

from macfill.core import conjugate, longest_word
from macfill.enumeration import enumerate_fillings
from macfill.poly import semistandard_tableaux
from macfill.stats import maj
from macfill.words import (ccw, charge, charge_index, charge_standard, charge_tableau, cocharge,
                           cocharge_standard, content, cw, is_semistandard, row_insert,
                           rsk_filling, shape_of, subword_decomposition)

from fixtures import CHARGE_FILLING, CHARGE_WORD, COCHARGE_FILLING, COCHARGE_WORD


def _digits(text):
    return tuple(int(ch) for ch in text)


def test_worked_subword_decomposition():
    subs = subword_decomposition(_digits("1322133241214"))
    assert subs == [_digits("3214"), _digits("3241"), _digits("321"), _digits("12")]
    assert [charge_standard(s) for s in subs] == [1, 1, 0, 1]
    assert charge(_digits("1322133241214")) == 3


def test_charge_word_of_displayed_filling():
    assert cw(CHARGE_FILLING) == CHARGE_WORD
    assert charge(cw(CHARGE_FILLING)) == maj(CHARGE_FILLING) == 2


def test_cocharge_word_of_displayed_filling():
    w = ccw(COCHARGE_FILLING)
    assert w == COCHARGE_WORD
    subs = subword_decomposition(w)
    assert subs == [_digits("13542"), _digits("1423"), _digits("12"), _digits("1")]
    assert [cocharge_standard(s) for s in subs] == [4, 1, 0, 0]
    assert cocharge(w) == maj(COCHARGE_FILLING) == 5


def _subwords_oracle(word):
    """Straight transcription of the extraction rule, on (position, letter) pairs."""
    left = list(enumerate(word))
    out = []
    while left:
        ones = [i for i, (_, v) in enumerate(left) if v == 1]
        cur = ones[-1]
        picked = [cur]
        want = 2
        while any(v == want for _, v in left):
            k = cur
            while True:
                k = (k - 1) % len(left)
                if left[k][1] == want:
                    break
            picked.append(k)
            cur = k
            want += 1
        out.append(tuple(v for i, (_, v) in enumerate(left) if i in picked))
        left = [p for i, p in enumerate(left) if i not in picked]
    return out


@st.composite
def partition_content_words(draw):
    lam = draw(st.sampled_from([(1,), (2, 1), (1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2, 1), (2, 2, 2)]))
    letters = [k + 1 for k, m in enumerate(lam) for _ in range(m)]
    return tuple(draw(st.permutations(letters)))


@given(partition_content_words())
def test_subword_decomposition_matches_transcription(w):
    assert subword_decomposition(w) == _subwords_oracle(w)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_charge_formulas_agree_on_permutations(n):
    for w in itertools.permutations(range(1, n + 1)):
        assert charge_standard(w) == charge_index(w)
        assert charge_standard(w) + cocharge_standard(w) == n * (n - 1) // 2


def _insertion_tableau(w):
    rows = []
    for x in w:
        row_insert(rows, x)
    return tuple(tuple(r) for r in rows)


@given(partition_content_words())
def test_charge_is_constant_on_knuth_classes(w):
    P = _insertion_tableau(w)
    assert charge(w) == charge_tableau(P)


def _kostka_foulkes(shape, mu):
    out = {}
    for T in semistandard_tableaux(shape, len(mu), mu):
        k = charge_tableau(T)
        out[k] = out.get(k, 0) + 1
    return out


@pytest.mark.parametrize("shape,mu,expected", [
    ((3,), (1, 1, 1), {3: 1}),
    ((2, 1), (1, 1, 1), {1: 1, 2: 1}),
    ((1, 1, 1), (1, 1, 1), {0: 1}),
    ((4,), (2, 1, 1), {3: 1}),
    ((3, 1), (2, 1, 1), {1: 1, 2: 1}),
    ((2, 2), (2, 1, 1), {1: 1}),
    ((2, 1, 1), (2, 1, 1), {0: 1}),
])
def test_classical_kostka_foulkes_values(shape, mu, expected):
    assert _kostka_foulkes(shape, mu) == expected


def test_rsk_of_displayed_filling():
    P, Q = rsk_filling(CHARGE_FILLING)
    assert P == ((1, 1, 1, 2), (2, 2, 5), (3, 3), (4,))
    assert charge_tableau(P) == 2


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 2, 1), (2, 2, 1, 0), (3, 1, 1, 0)])
def test_rsk_shapes_and_content(lam):
    for F in enumerate_fillings("coinvfree", lam, longest_word(len(lam))):
        P, Q = rsk_filling(F)
        assert is_semistandard(P) and is_semistandard(Q)
        assert content(P) == conjugate(lam)
        assert shape_of(Q) == conjugate(shape_of(P))
        assert charge_tableau(P) == maj(F)


def test_subwords_need_partition_content():
    with pytest.raises(ValueError):
        charge((2, 2, 1))
