"""Divided differences, Demazure operators and their t-deformations on ``Poly``."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .core import check_composition, simple_swap
from .poly import Poly


def divided_difference(p: Poly, i: int) -> Poly:
    """(p - s_i p) / (x_i - x_{i+1}), computed monomial by monomial.

    For x_i^a x_{i+1}^b with a > b the quotient is
    x_i^b x_{i+1}^b (x_i^{a-b-1} + x_i^{a-b-2} x_{i+1} + ... + x_{i+1}^{a-b-1}),
    and the a < b case is minus the mirror image.
    """
    n = p.n
    if not 1 <= i < n:
        raise IndexError(f"divided difference index {i} out of range for n={n}")
    out = defaultdict(int)
    for (qe, te, xe), c in p.items():
        a, b = xe[i - 1], xe[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, d = min(a, b), abs(a - b)
        base = list(xe)
        for k in range(d):
            base[i - 1] = lo + d - 1 - k
            base[i] = lo + k
            out[(qe, te, tuple(base))] += sign * c
    return Poly(n, out)


def pi(p: Poly, i: int) -> Poly:
    return divided_difference(p * Poly.var(p.n, i), i)


def theta(p: Poly, i: int) -> Poly:
    return pi(p, i) - p


def pi_tilde(p: Poly, i: int) -> Poly:
    t = Poly.t(p.n)
    return (1 - t) * pi(p, i) + t * p.swap(i)


def theta_tilde(p: Poly, i: int) -> Poly:
    t = Poly.t(p.n)
    return (1 - t) * theta(p, i) + t * p.swap(i)


def apply_word(op, p: Poly, word: Sequence[int]) -> Poly:
    """Apply op_{word[-1]} first, ..., op_{word[0]} last (operator composition order)."""
    for i in reversed(word):
        p = op(p, i)
    return p


@lru_cache(maxsize=None)
def key_by_operators(alpha: tuple[int, ...]) -> Poly:
    """K_alpha from Demazure operators.

    For weakly increasing alpha the key is the single monomial
    x_1^{alpha_n} x_2^{alpha_{n-1}} ... x_n^{alpha_1}. Otherwise pick the
    first i with alpha_i > alpha_{i+1} and use K_alpha = pi_{n-i} K_{s_i alpha}:
    rows i, i+1 of the w0 basement carry the letters n+1-i, n-i, and the
    operator acts on the variables named by those letters.
    """
    alpha = check_composition(alpha)
    n = len(alpha)
    for i in range(1, n):
        if alpha[i - 1] > alpha[i]:
            return pi(key_by_operators(simple_swap(alpha, i)), n - i)
    return Poly.monomial(n, tuple(reversed(alpha)))


@dataclass
class Verdict:
    passed: bool
    details: dict = field(default_factory=dict)

    def to_obj(self) -> dict:
        return {"passed": self.passed, **self.details}


def first_difference(lhs: Poly, rhs: Poly):
    """A witness monomial where two polynomials differ, or None."""
    diff = lhs - rhs
    if not diff:
        return None
    (qe, te, xe), c = diff.sorted_terms()[0]
    return {"q": qe, "t": te, "x": list(xe), "lhs": lhs.coefficient(xe, qe, te),
            "rhs": rhs.coefficient(xe, qe, te)}


def operator_decomposition_check(alpha: Sequence[int], sigma: Sequence[int], i: int,
                                 e_func=None) -> Verdict:
    """Check E^s_b = pi_j E^s_{s_i b} = E^s_{s_i b} + E^{s_i s}_{s_i b} (all at t = 0).

    Requires sigma_i = sigma_{i+1} + 1 and alpha_i != alpha_{i+1}; b is
    whichever of alpha, s_i alpha has the larger part in position i. Rows
    i, i+1 are swapped in the shape, while the operator acts on the
    variables x_j, x_{j+1} with j = sigma_{i+1}, the smaller of the two
    basement letters. The middle step theta_j E^s_{s_i b} = E^{s_i s}_{s_i b}
    is checked as well.
    ``e_func`` defaults to the enumeration-based E(x; q, 0) and can be
    swapped for harness self-tests.
    """
    from .specializations import e_t0

    e_func = e_func or e_t0
    alpha, sigma = tuple(alpha), tuple(sigma)
    n = len(alpha)
    if not 1 <= i < n or len(sigma) != n:
        raise ValueError("index or basement length out of range")
    if sigma[i - 1] != sigma[i] + 1:
        raise ValueError(f"need sigma_{i} = sigma_{i+1} + 1, got {sigma}")
    if alpha[i - 1] == alpha[i]:
        raise ValueError(f"need alpha_{i} != alpha_{i+1}, got {alpha}")
    big = alpha if alpha[i - 1] > alpha[i] else simple_swap(alpha, i)
    small = simple_swap(big, i)
    lhs = e_func(big, sigma)
    low = e_func(small, sigma)
    swapped = e_func(small, simple_swap(sigma, i))
    j = sigma[i]
    via_pi = pi(low, j)
    via_theta = theta(low, j)
    checks = {
        "pi": first_difference(lhs, via_pi),
        "sum": first_difference(lhs, low + swapped),
        "theta": first_difference(via_theta, swapped),
    }
    failed = {k: v for k, v in checks.items() if v is not None}
    return Verdict(not failed, {"shape": list(big), "basement": list(sigma), "i": i,
                                "operator_index": j, "witness": failed or None})
