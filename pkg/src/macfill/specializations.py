"""Generating functions of filling classes.

Everything here is a sum over an enumerated filling class, never an operator
recursion, so the operator identities in ``demazure`` remain independent checks.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .core import big_basement, check_composition, longest_word
from .enumeration import enumerate_fillings
from .poly import Poly
from .stats import inv, maj


def _weight(F, n):
    x = [0] * n
    for row in F.rows:
        for v in row:
            x[v - 1] += 1
    return tuple(x)


def _sum(fillings, n, with_inv=False) -> Poly:
    terms = defaultdict(int)
    for F in fillings:
        terms[(maj(F), inv(F) if with_inv else 0, _weight(F, n))] += 1
    return Poly(n, terms)


def e_t0(alpha: Sequence[int], basement: Sequence[int]) -> Poly:
    """E^sigma_alpha(x; q, 0): coinversion-free fillings weighted by x^F q^maj."""
    alpha = check_composition(alpha)
    return _sum(enumerate_fillings("coinvfree", alpha, basement), len(alpha))


def htilde(alpha: Sequence[int], basement: Sequence[int]) -> Poly:
    """H~^sigma_alpha(x; q, t) over all fillings with a big basement."""
    alpha = check_composition(alpha)
    return _sum(enumerate_fillings("fil", alpha, basement), len(alpha), with_inv=True)


def htilde_t0(alpha: Sequence[int], basement: Sequence[int]) -> Poly:
    """H~^sigma_alpha(x; q, 0) over inversion-free fillings."""
    alpha = check_composition(alpha)
    return _sum(enumerate_fillings("invfree", alpha, basement), len(alpha))


def key(alpha: Sequence[int]) -> Poly:
    """Key polynomial K_alpha = E^{w0}_alpha(x; 0, 0)."""
    alpha = check_composition(alpha)
    n = len(alpha)
    terms = defaultdict(int)
    for F in enumerate_fillings("coinvfree", alpha, longest_word(n)):
        if maj(F) == 0:
            terms[(0, 0, _weight(F, n))] += 1
    return Poly(n, terms)


def modified_hl(lam: Sequence[int]) -> Poly:
    """H~_lambda(x; q, 0) with the big w0 basement."""
    n = len(lam)
    return htilde_t0(lam, big_basement(longest_word(n)))
