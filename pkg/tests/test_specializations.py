import pytest

from macfill.core import big_basement, compositions, conjugate, longest_word, partitions, pad
from macfill.poly import Poly, elementary, schur
from macfill.specializations import e_t0, htilde, htilde_t0, key, modified_hl

from fixtures import EX22_BASEMENT


def _mono(*e):
    return Poly.monomial(len(e), e)


def test_example_qatom_polynomial():
    expected = (_mono(1, 1, 1, 2) + _mono(1, 1, 2, 1) + _mono(1, 0, 2, 2) + _mono(0, 1, 2, 2))
    assert e_t0((1, 0, 2, 2), EX22_BASEMENT) == expected


@pytest.mark.parametrize("lam", [(1, 0), (2, 1, 0), (2, 2, 1), (3, 1, 0), (2, 1, 1, 0)])
def test_q_one_gives_elementary(lam):
    assert e_t0(lam, longest_word(len(lam))).substitute(q=1) == elementary(conjugate(lam), len(lam))


@pytest.mark.parametrize("lam", [(2, 1, 0), (3, 1, 1), (2, 2, 0, 0)])
def test_partition_keys_are_schur(lam):
    assert key(lam) == schur(lam, len(lam))


def test_small_keys():
    # reversed-order convention: K_(0,1) is the single monomial x_1
    assert key((0, 1)) == _mono(1, 0)
    assert key((1, 0)) == _mono(1, 0) + _mono(0, 1)


def test_two_box_modified_macdonald():
    s2, s11 = schur((2,), 2), schur((1, 1), 2)
    q, t = Poly.q(2), Poly.t(2)
    assert htilde((2, 0), big_basement((2, 1))) == s2 + q * s11
    assert htilde((1, 1), big_basement((2, 1))) == s2 + t * s11


@pytest.mark.parametrize("lam", [(2, 1, 0), (1, 1, 1), (3, 1, 0)])
def test_modified_macdonald_is_symmetric_and_specializes(lam):
    w0 = big_basement(longest_word(len(lam)))
    H = htilde(lam, w0)
    assert H.is_symmetric()
    assert H.substitute(t=0) == htilde_t0(lam, w0) == modified_hl(lam)


def test_modified_hall_littlewood_three_boxes():
    # one row has no triples, so maj alone gives s_3 + (q + q^2) s_21 + q^3 s_111
    q = Poly.q(3)
    expected = schur((3,), 3) + (q + q * q) * schur((2, 1), 3) + q ** 3 * schur((1, 1, 1), 3)
    assert modified_hl((3, 0, 0)) == expected
    # three rows of one box carry no descents at all
    assert modified_hl((1, 1, 1)).substitute(q=1) == modified_hl((1, 1, 1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_modified_macdonald_symmetric_for_all_small_partitions(n):
    for size in range(1, 6):
        for lam in partitions(size):
            if len(lam) > n:
                continue
            H = htilde(pad(lam, n), big_basement(longest_word(n)))
            assert H.is_symmetric()
            assert all(c > 0 for _, c in H.items())


@pytest.mark.parametrize("n,size", [(3, 3), (3, 4), (4, 3)])
def test_coefficients_are_positive(n, size):
    w0 = longest_word(n)
    for alpha in compositions(size, n):
        for p in (e_t0(alpha, w0), key(alpha), htilde_t0(alpha, big_basement(w0))):
            assert all(isinstance(c, int) and c > 0 for _, c in p.items())
