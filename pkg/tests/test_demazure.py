import random

import pytest
from hypothesis import given, strategies as st

from macfill.core import compositions
from macfill.demazure import (apply_word, divided_difference, key_by_operators,
                              operator_decomposition_check, pi, pi_tilde, theta, theta_tilde)
from macfill.poly import Poly, schur
from macfill.specializations import e_t0, key

N = 4


def _rand(seed, n=N):
    rng = random.Random(seed)
    p = Poly.zero(n)
    for _ in range(4):
        e = [0] * n
        for _ in range(rng.randint(0, 4)):
            e[rng.randrange(n)] += 1
        p = p + Poly.monomial(n, e, q=rng.randint(0, 1), coeff=rng.randint(-3, 3))
    return p


seeds = st.integers(0, 10 ** 6)
indices = st.integers(1, N - 1)


@given(seeds, indices)
def test_divided_difference_inverts_multiplication(seed, i):
    p = _rand(seed)
    d = divided_difference(p, i)
    assert d * (Poly.var(N, i) - Poly.var(N, i + 1)) == p - p.swap(i)


@given(seeds, seeds, indices)
def test_leibniz_rule(a, b, i):
    f, g = _rand(a), _rand(b)
    lhs = divided_difference(f * g, i)
    assert lhs == divided_difference(f, i) * g + f.swap(i) * divided_difference(g, i)


@given(seeds, indices)
def test_idempotence_and_nilpotence(seed, i):
    p = _rand(seed)
    assert not divided_difference(divided_difference(p, i), i)
    assert pi(pi(p, i), i) == pi(p, i)
    assert theta(theta(p, i), i) == -theta(p, i)


@given(seeds, st.sampled_from([(1, 2), (2, 3)]))
def test_braid_relations(seed, ij):
    i, j = ij
    p = _rand(seed)
    for op in (pi, theta, pi_tilde, theta_tilde):
        assert apply_word(op, p, (i, j, i)) == apply_word(op, p, (j, i, j))
    assert apply_word(pi, p, (1, 3)) == apply_word(pi, p, (3, 1))


@given(seeds, indices)
def test_t_deformed_product_is_t(seed, i):
    p = _rand(seed)
    t = Poly.t(N)
    assert pi_tilde(theta_tilde(p, i), i) == t * p
    assert theta_tilde(pi_tilde(p, i), i) == t * p


def test_symmetric_functions_are_fixed():
    s = schur((2, 1), N)
    for i in range(1, N):
        assert not divided_difference(s, i)
        assert pi(s, i) == s


@pytest.mark.parametrize("n,size", [(2, 3), (3, 3), (3, 4)])
def test_operator_keys_match_enumerated_keys(n, size):
    for alpha in compositions(size, n):
        assert key_by_operators(alpha) == key(alpha)


def test_decomposition_check_on_a_small_case():
    v = operator_decomposition_check((1, 0, 2), (3, 2, 1), 1)
    assert v.passed


def test_decomposition_check_catches_a_dropped_monomial():
    def broken(alpha, sigma):
        p = e_t0(alpha, sigma)
        if tuple(alpha) == (1, 0, 2):
            (qe, te, xe), c = p.sorted_terms()[0]
            p = p - Poly.monomial(p.n, xe, qe, te, c)
        return p

    v = operator_decomposition_check((1, 0, 2), (3, 2, 1), 1, e_func=broken)
    assert not v.passed


def test_decomposition_check_rejects_bad_input():
    with pytest.raises(ValueError):
        operator_decomposition_check((1, 0), (1, 2), 1)
    with pytest.raises(ValueError):
        operator_decomposition_check((1, 1), (2, 1), 1)


@given(seeds, indices)
def test_divided_difference_vanishes_exactly_on_invariants(seed, i):
    p = _rand(seed)
    sym = p + p.swap(i)
    assert not divided_difference(sym, i)
    assert bool(divided_difference(p, i)) == (p.swap(i) != p)
