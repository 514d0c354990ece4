"""Sparse polynomials in x_1..x_n, q, t with exact integer coefficients."""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from typing import Iterable, Mapping

# a term key is (q_exp, t_exp, x_exps)
Key = tuple[int, int, tuple[int, ...]]


class Poly:
    """Element of Z[q, t][x_1, ..., x_n].

    Immutable. Terms are kept in a dict keyed by ``(q, t, x)`` exponent data;
    zero coefficients are never stored.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Key, int] | None = None):
        if n < 0:
            raise ValueError("variable count must be non-negative")
        self.n = n
        clean = {}
        if terms:
            for key, c in terms.items():
                if c == 0:
                    continue
                qe, te, xe = key
                xe = tuple(xe)
                if len(xe) != n:
                    raise ValueError(f"exponent vector {xe} does not have length {n}")
                if qe < 0 or te < 0 or min(xe, default=0) < 0:
                    raise ValueError("negative exponent")
                clean[(qe, te, xe)] = c
        self._terms = clean
        self._hash = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> Poly:
        return cls.monomial(n)

    @classmethod
    def monomial(cls, n: int, x: Iterable[int] = (), q: int = 0, t: int = 0, coeff: int = 1) -> Poly:
        x = tuple(x) or (0,) * n
        return cls(n, {(q, t, x): coeff})

    @classmethod
    def var(cls, n: int, i: int) -> Poly:
        """The variable x_i, 1-based."""
        if not 1 <= i <= n:
            raise IndexError(f"x_{i} out of range for n={n}")
        x = [0] * n
        x[i - 1] = 1
        return cls.monomial(n, x)

    @classmethod
    def q(cls, n: int) -> Poly:
        return cls.monomial(n, q=1)

    @classmethod
    def t(cls, n: int) -> Poly:
        return cls.monomial(n, t=1)

    @classmethod
    def from_counter(cls, n: int, counts: Mapping[Key, int]) -> Poly:
        return cls(n, counts)

    # -- basic protocol -------------------------------------------------

    @property
    def terms(self) -> dict[Key, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.monomial(self.n, coeff=other) if other else Poly(self.n)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return Poly.monomial(self.n, coeff=other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Poly(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(self.n, {k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        out: dict[Key, int] = defaultdict(int)
        for (q1, t1, x1), c1 in self._terms.items():
            for (q2, t2, x2), c2 in other._terms.items():
                out[(q1 + q2, t1 + t2, tuple(a + b for a, b in zip(x1, x2)))] += c1 * c2
        return Poly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- queries --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Key, int]]:
        return sorted(self._terms.items())

    def coefficient(self, x: Iterable[int], q: int = 0, t: int = 0) -> int:
        return self._terms.get((q, t, tuple(x)), 0)

    def t_degree(self) -> int:
        return max((k[1] for k in self._terms), default=-1)

    def q_degree(self) -> int:
        return max((k[0] for k in self._terms), default=-1)

    def t_coefficient(self, k: int) -> Poly:
        """Coefficient of t^k, as a polynomial in x and q."""
        return Poly(self.n, {(qe, 0, xe): c for (qe, te, xe), c in self._terms.items() if te == k})

    def q_coefficient(self, k: int) -> Poly:
        return Poly(self.n, {(0, te, xe): c for (qe, te, xe), c in self._terms.items() if qe == k})

    def x_part(self) -> dict[tuple[int, ...], Poly]:
        """Group terms by x-monomial; values are polynomials in q, t only."""
        out: dict[tuple[int, ...], dict] = defaultdict(dict)
        zero = (0,) * self.n
        for (qe, te, xe), c in self._terms.items():
            out[xe][(qe, te, zero)] = c
        return {xe: Poly(self.n, d) for xe, d in out.items()}

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def evaluate(self, x: Iterable[int], q: int = 1, t: int = 1) -> int:
        x = tuple(x)
        if len(x) != self.n:
            raise ValueError("wrong number of x values")
        total = 0
        for (qe, te, xe), c in self._terms.items():
            v = c * q**qe * t**te
            for base, e in zip(x, xe):
                if e:
                    v *= base**e
            total += v
        return total

    # -- substitutions --------------------------------------------------

    def substitute(self, q: int | None = None, t: int | None = None,
                   x: Mapping[int, int] | None = None) -> Poly:
        """Specialize q and/or t to integers, and/or x_i (1-based) to integers."""
        x = dict(x or {})
        for i in x:
            if not 1 <= i <= self.n:
                raise IndexError(f"x_{i} out of range for n={self.n}")
        out: dict[Key, int] = defaultdict(int)
        for (qe, te, xe), c in self._terms.items():
            if q is not None:
                c *= q**qe
                qe = 0
            if t is not None:
                c *= t**te
                te = 0
            if x:
                xe = list(xe)
                for i, v in x.items():
                    c *= v ** xe[i - 1]
                    xe[i - 1] = 0
                xe = tuple(xe)
            out[(qe, te, xe)] += c
        return Poly(self.n, out)

    def permute_vars(self, perm: Iterable[int]) -> Poly:
        """Send x_i to x_{perm[i-1]} (perm is one-line, 1-based)."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError(f"{perm} is not a permutation of 1..{self.n}")
        out = {}
        for (qe, te, xe), c in self._terms.items():
            new = [0] * self.n
            for i, e in enumerate(xe):
                new[perm[i] - 1] = e
            out[(qe, te, tuple(new))] = c
        return Poly(self.n, out)

    def swap(self, i: int) -> Poly:
        """The simple transposition s_i acting on variable indices."""
        if not 1 <= i < self.n:
            raise IndexError(f"s_{i} out of range for n={self.n}")
        out = {}
        for (qe, te, xe), c in self._terms.items():
            xe = list(xe)
            xe[i - 1], xe[i] = xe[i], xe[i - 1]
            out[(qe, te, tuple(xe))] = c
        return Poly(self.n, out)

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    # -- output ---------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"c": c, "q": qe, "t": te, "x": list(xe)}
                      for (qe, te, xe), c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> Poly:
        try:
            n = int(obj["n"])
            terms: dict[Key, int] = defaultdict(int)
            for term in obj["terms"]:
                terms[(int(term["q"]), int(term["t"]), tuple(int(v) for v in term["x"]))] += int(term["c"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed polynomial JSON: {exc}") from None
        return cls(n, terms)

    @classmethod
    def from_json(cls, text: str) -> Poly:
        return cls.from_json_obj(json.loads(text))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (qe, te, xe), c in self.sorted_terms():
            factors = []
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            if te:
                factors.append("t" if te == 1 else f"t^{te}")
            for i, e in enumerate(xe, 1):
                if e:
                    factors.append(f"x{i}" if e == 1 else f"x{i}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def latex(self) -> str:
        """LaTeX string, one monomial per term in canonical order."""
        if not self._terms:
            return "0"
        out = []
        for (qe, te, xe), c in self.sorted_terms():
            body = ""
            if qe:
                body += "q" if qe == 1 else f"q^{{{qe}}}"
            if te:
                body += "t" if te == 1 else f"t^{{{te}}}"
            for i, e in enumerate(xe, 1):
                if e:
                    body += f"x_{{{i}}}" if e == 1 else f"x_{{{i}}}^{{{e}}}"
            if not body:
                out.append(str(c))
            elif c == 1:
                out.append(body)
            elif c == -1:
                out.append("-" + body)
            else:
                out.append(f"{c}{body}")
        return " + ".join(out).replace("+ -", "- ")


def elementary_single(k: int, n: int) -> Poly:
    """e_k(x_1..x_n)."""
    if k < 0:
        return Poly.zero(n)
    terms = {}
    for subset in itertools.combinations(range(n), k):
        x = [0] * n
        for i in subset:
            x[i] = 1
        terms[(0, 0, tuple(x))] = 1
    return Poly(n, terms)


def elementary(mu: Iterable[int], n: int) -> Poly:
    """e_mu = prod e_{mu_i}."""
    result = Poly.one(n)
    for part in mu:
        if part:
            result = result * elementary_single(part, n)
    return result


def semistandard_tableaux(shape: Iterable[int], max_entry: int, content=None):
    """Yield SSYT of the given partition shape as tuples of row tuples.

    Entries are bounded by ``max_entry``; when ``content`` is given only
    tableaux with that content (multiplicity of 1, 2, ...) are produced.
    Filling proceeds row by row, left to right.
    """
    shape = [p for p in shape if p > 0]
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    remaining = None
    if content is not None:
        content = list(content)
        if sum(content) != len(cells):
            return
        max_entry = min(max_entry, len(content))
        remaining = content + [0] * max(0, max_entry - len(content))

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = grid[r][c - 1]
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            if remaining is not None:
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            grid[r][c] = v
            yield from rec(k + 1)
            if remaining is not None:
                remaining[v - 1] += 1
        grid[r][c] = 0

    yield from rec(0)


def schur(shape: Iterable[int], n: int) -> Poly:
    """s_lambda(x_1..x_n) as a sum over semistandard tableaux."""
    shape = tuple(shape)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise ValueError(f"{shape} is not a partition")
    terms: dict[Key, int] = defaultdict(int)
    for tab in semistandard_tableaux(shape, n):
        x = [0] * n
        for row in tab:
            for v in row:
                x[v - 1] += 1
        terms[(0, 0, tuple(x))] += 1
    return Poly(n, terms)
