"""Generators for NAF, CoInvFree, InvFree and FIL, and column-set reconstruction."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .core import (Filling, basement_kind, check_composition, is_partition,
                   longest_word, rearrangements)
from .stats import is_coinversion, triple_cells

CLASSES = ("naf", "coinvfree", "invfree", "fil")
_NEEDS_KIND = {"naf": "perm", "coinvfree": "perm", "invfree": "big", "fil": "big"}


class MultipleSolutions(RuntimeError):
    """Two class fillings share the same column sets (uniqueness breach)."""


def _check_class(cls: str, alpha, basement):
    if cls not in CLASSES:
        raise ValueError(f"unknown filling class {cls!r}; expected one of {CLASSES}")
    alpha = check_composition(alpha)
    if len(alpha) != len(basement):
        raise ValueError(f"shape {alpha} and basement {tuple(basement)} differ in length")
    kind = basement_kind(basement)
    if kind != _NEEDS_KIND[cls]:
        raise ValueError(f"class {cls} needs a {_NEEDS_KIND[cls]} basement, got {kind}")
    return alpha


@lru_cache(maxsize=None)
def _plan(shape: tuple[int, ...]):
    """Cells in fill order and, per cell, the constraints it closes.

    Fill order is column-major (columns left to right, rows top to bottom).
    A triple or attacking pair is checked when its last cell is placed.
    """
    n = len(shape)
    order = [(r, c) for c in range(1, max(shape, default=0) + 1) for r in range(n) if shape[r] >= c]
    pos = {cell: i for i, cell in enumerate(order)}
    for r in range(n):
        pos[(r, 0)] = -1
    closing: dict = {cell: [] for cell in order}
    for _, a, b, c in triple_cells(shape):
        last = max((a, b, c), key=lambda cell: pos[cell])
        closing[last].append((a, b, c))
    attacks: dict = {}
    for r, c in order:
        same = [(r2, c) for r2 in range(r) if shape[r2] >= c]
        diag = [(r2, c - 1) for r2 in range(r) if shape[r2] >= c - 1]
        attacks[(r, c)] = tuple(same + diag)
    return tuple(order), {k: tuple(v) for k, v in closing.items()}, attacks


def enumerate_fillings(cls: str, alpha: Sequence[int], basement: Sequence[int],
                       max_entry: int | None = None) -> Iterator[Filling]:
    """Yield every filling of the class in a fixed order.

    Cells are filled column by column, top to bottom, values ascending in
    1..n; violations are pruned as soon as the last cell of a triple or
    attacking pair is placed.
    """
    basement = tuple(basement)
    alpha = _check_class(cls, alpha, basement)
    n = len(alpha)
    top = n if max_entry is None else max_entry
    order, closing, attacks = _plan(alpha)
    grid = [[basement[r]] + [0] * alpha[r] for r in range(n)]
    want_coinv = cls == "invfree"
    check_triples = cls in ("coinvfree", "invfree")
    check_attacks = cls == "naf"

    def ok(r, c):
        v = grid[r][c]
        if check_attacks:
            for r2, c2 in attacks[(r, c)]:
                if grid[r2][c2] == v:
                    return False
        if check_triples:
            for a, b, cc in closing[(r, c)]:
                if is_coinversion(grid[a[0]][a[1]], grid[b[0]][b[1]], grid[cc[0]][cc[1]]) != want_coinv:
                    return False
        return True

    def rec(k):
        if k == len(order):
            yield Filling(basement, tuple(tuple(row[1:]) for row in grid))
            return
        r, c = order[k]
        for v in range(1, top + 1):
            grid[r][c] = v
            if ok(r, c):
                yield from rec(k + 1)
        grid[r][c] = 0

    yield from rec(0)


def brute_force(cls: str, alpha: Sequence[int], basement: Sequence[int]) -> list[Filling]:
    """Filter all n^|alpha| assignments by the class predicate (oracle for the generator)."""
    from itertools import product

    from .stats import is_attacking, is_coinversion_free, is_inversion_free

    basement = tuple(basement)
    alpha = _check_class(cls, alpha, basement)
    n = len(alpha)
    pred = {"naf": lambda F: not is_attacking(F), "coinvfree": is_coinversion_free,
            "invfree": is_inversion_free, "fil": lambda F: True}[cls]
    out = []
    for values in product(range(1, n + 1), repeat=sum(alpha)):
        rows, k = [], 0
        for a in alpha:
            rows.append(values[k:k + a])
            k += a
        F = Filling(basement, tuple(rows))
        if pred(F):
            out.append(F)
    return out


def _column_ok(cls: str, grid, col: int, shape) -> bool:
    """Check every triple whose b-cell lies in ``col`` (all its cells are in col-1, col)."""
    want_coinv = cls == "invfree"
    _, closing, _ = _plan(shape)
    for r in range(len(shape)):
        if shape[r] >= col:
            for a, b, c in closing[(r, col)]:
                if is_coinversion(grid[a[0]][a[1]], grid[b[0]][b[1]], grid[c[0]][c[1]]) != want_coinv:
                    return False
    return True


def reconstruct_greedy(cols, alpha: Sequence[int], basement: Sequence[int] | None = None) -> Filling:
    """Greedy partition-shape rebuild for a w0 basement.

    Column by column, top to bottom: the entry right of e is the largest
    unused entry of the next column set that is <= e, else the largest unused.
    """
    alpha = check_composition(alpha)
    n = len(alpha)
    basement = longest_word(n) if basement is None else tuple(basement)
    grid = [[basement[r]] for r in range(n)]
    for c in range(1, len(cols)):
        pool = sorted(cols[c])
        for r in range(n):
            if alpha[r] < c:
                continue
            left = grid[r][c - 1]
            fits = [v for v in pool if v <= left]
            pick = fits[-1] if fits else pool[-1]
            pool.remove(pick)
            grid[r].append(pick)
    return Filling(basement, tuple(tuple(row[1:]) for row in grid))


def reconstruct(cls: str, cols, alpha: Sequence[int], basement: Sequence[int]) -> Filling | None:
    """The unique class filling with the given column sets, or None.

    Raises MultipleSolutions if two such fillings exist.
    """
    from .core import column_sets
    from .stats import is_coinversion_free, is_inversion_free

    if cls not in ("coinvfree", "invfree"):
        raise ValueError("reconstruct is defined for coinvfree and invfree only")
    basement = tuple(basement)
    alpha = _check_class(cls, alpha, basement)
    cols = tuple(tuple(sorted(c)) for c in cols)
    n = len(alpha)
    width = max(alpha, default=0)
    expected = [n] + [sum(1 for a in alpha if a >= c) for c in range(1, width + 1)]
    if [len(c) for c in cols] != expected:
        raise ValueError(f"column set sizes {[len(c) for c in cols]} do not fit shape {alpha}")
    if cols[0] != tuple(sorted(basement)):
        return None

    if cls == "coinvfree" and is_partition(alpha) and basement == longest_word(n):
        F = reconstruct_greedy(cols, alpha, basement)
        if is_coinversion_free(F) and column_sets(F) == cols:
            return F
        return None

    grid = [[basement[r]] + [0] * alpha[r] for r in range(n)]
    found: list[Filling] = []

    def rec(c):
        if c > width:
            F = Filling(basement, tuple(tuple(row[1:]) for row in grid))
            if found:
                raise MultipleSolutions(
                    f"two {cls} fillings with column sets {cols}:\n{found[0]}\n--\n{F}")
            found.append(F)
            return
        rows_here = [r for r in range(n) if alpha[r] >= c]
        for arrangement in rearrangements(cols[c]):
            for r, v in zip(rows_here, arrangement):
                grid[r][c] = v
            if _column_ok(cls, grid, c, alpha):
                rec(c + 1)

    rec(1)
    if not found:
        return None
    F = found[0]
    assert (is_coinversion_free(F) if cls == "coinvfree" else is_inversion_free(F))
    return F
