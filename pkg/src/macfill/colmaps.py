"""Column-set preserving row swaps on coinversion-free and inversion-free fillings.

``phi`` acts on coinversion-free fillings and ``psi`` on inversion-free
fillings with a big basement. Both sweep two adjacent rows right to left,
deciding at each column which entry goes to the lower row.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import (Filling, big_basement, column_sets, is_partition, longest_word,
                   simple_swap, sort_partition)
from .enumeration import reconstruct
from .stats import is_coinversion_free, is_inversion_free, maj


class InvariantBreach(RuntimeError):
    """A map produced output outside its class or changed a conserved quantity."""


@dataclass(frozen=True)
class TwoRowResult:
    filling: Filling
    basement_swapped: bool


def _phi_choice(A: int, B: int, C: int) -> int:
    # C sits in the b position of a triple, so an entry equal to C ranks above it
    bigger = [v for v in (A, B) if v >= C]
    return min(bigger) if bigger else min(A, B)


def _psi_choice(A: int, B: int, C: int) -> int:
    if (A >= C) == (B >= C):
        return max(A, B)
    return min(A, B)


CHOICES: dict[str, Callable[[int, int, int], int]] = {"phi": _phi_choice, "psi": _psi_choice}


def sweep(top: Sequence[int], bottom: Sequence[int], choose,
          basement_rule: bool = True) -> tuple[tuple, tuple]:
    """Right-to-left filling rule on two augmented rows (basement at index 0).

    ``top`` must be strictly longer. Cells that only the top row has drop to
    the bottom row; at a shared column ``choose(A, B, C)`` names the entry
    that goes below, C being the entry just placed below in the column to
    the right. With ``basement_rule`` off the basement entries are simply
    exchanged instead. Returns the new (top, bottom); the top is now the
    short row.
    """
    if len(top) <= len(bottom):
        raise ValueError("the upper row must be strictly longer")
    new_top = [0] * len(bottom)
    new_bottom = [0] * len(top)
    C = None
    if not basement_rule:
        new_top[0], new_bottom[0] = bottom[0], top[0]
    for c in range(len(top) - 1, -1 if basement_rule else 0, -1):
        if c >= len(bottom):
            new_bottom[c] = C = top[c]
            continue
        A, B = top[c], bottom[c]
        low = choose(A, B, C)
        new_bottom[c] = low
        new_top[c] = B if low == A else A
        C = low
    return tuple(new_top), tuple(new_bottom)


def _two_row_input(F: Filling):
    if F.n != 2:
        raise ValueError("expected a two-row filling")
    (s1, s2), (a1, a2) = F.basement, F.shape
    if not s1 > s2:
        raise ValueError(f"need basement sigma_1 > sigma_2, got {F.basement}")
    if not a1 > a2:
        raise ValueError(f"need shape alpha_1 > alpha_2, got {F.shape}")
    return F.augmented_rows()


def phi_two_row(F: Filling) -> TwoRowResult:
    top, bottom = _two_row_input(F)
    if F.kind != "perm" or not is_coinversion_free(F):
        raise ValueError("phi needs a coinversion-free filling with a permutation basement")
    new_top, new_bottom = sweep(top, bottom, _phi_choice)
    G = Filling((new_top[0], new_bottom[0]), (new_top[1:], new_bottom[1:]))
    return TwoRowResult(G, G.basement != F.basement)


def psi_two_row(F: Filling) -> Filling:
    top, bottom = _two_row_input(F)
    if F.kind != "big" or not is_inversion_free(F):
        raise ValueError("psi needs an inversion-free filling with a big basement")
    new_top, new_bottom = sweep(top, bottom, _psi_choice, basement_rule=False)
    G = Filling((new_top[0], new_bottom[0]), (new_top[1:], new_bottom[1:]))
    assert G.basement == (F.basement[1], F.basement[0])
    return G


def admissible(kind: str, F: Filling, i: int) -> bool:
    """Whether the map may be applied to rows i, i+1 (0-based) of F."""
    if not 0 <= i < F.n - 1:
        return False
    s, a = F.basement, F.shape
    if s[i] <= s[i + 1]:
        return False
    if kind == "phi":
        return a[i] > a[i + 1]
    return a[i] >= a[i + 1]


def _apply_raw(kind: str, F: Filling, i: int) -> Filling:
    aug = F.augmented_rows()
    if kind == "psi" and F.shape[i] == F.shape[i + 1]:
        new_top = (aug[i + 1][0],) + aug[i][1:]
        new_bottom = (aug[i][0],) + aug[i + 1][1:]
    else:
        new_top, new_bottom = sweep(aug[i], aug[i + 1], CHOICES[kind],
                                    basement_rule=kind == "phi")
    aug[i], aug[i + 1] = new_top, new_bottom
    return Filling(tuple(r[0] for r in aug), tuple(r[1:] for r in aug))


def apply_in_filling(kind: str, F: Filling, i: int, check: bool = True) -> Filling:
    """Apply phi or psi to rows i, i+1 (0-based) of F; other rows are untouched.

    With ``check`` the output is verified to stay in the class with the same
    column sets and maj; a failure raises InvariantBreach.
    """
    if kind not in CHOICES:
        raise ValueError(f"unknown map {kind!r}")
    if kind == "phi" and F.kind != "perm":
        raise ValueError("phi needs a permutation basement")
    if kind == "psi" and F.kind != "big":
        raise ValueError("psi needs a big basement")
    if not admissible(kind, F, i):
        raise ValueError(f"{kind} is not admissible at rows {i}, {i + 1} of shape "
                         f"{F.shape} with basement {F.basement}")
    G = _apply_raw(kind, F, i)
    if check:
        in_class = is_coinversion_free if kind == "phi" else is_inversion_free
        if not in_class(F):
            raise ValueError(f"input is not {'coinversion' if kind == 'phi' else 'inversion'}-free")
        problems = []
        if not in_class(G):
            problems.append("class")
        if column_sets(G) != column_sets(F):
            problems.append("column sets")
        if maj(G) != maj(F):
            problems.append("maj")
        if problems:
            raise InvariantBreach(f"{kind} at row {i} broke {problems}:\n{F}\n->\n{G}")
    return G


def preimages(kind: str, G: Filling, i: int) -> list[Filling]:
    """All F with apply_in_filling(kind, F, i) == G, found by search.

    Candidates keep every row except i, i+1, take the longer of the two
    rows on top, and try both arrangements of each shared column.
    """
    aug = G.augmented_rows()
    up, down = aug[i], aug[i + 1]
    if len(up) > len(down):
        return []
    found = []
    short = len(up)
    for mask in itertools.product((False, True), repeat=short):
        new_top = list(down)
        new_bottom = list(up)
        for c, flip in enumerate(mask):
            if flip:
                new_top[c], new_bottom[c] = new_bottom[c], new_top[c]
        rows = list(aug)
        rows[i], rows[i + 1] = tuple(new_top), tuple(new_bottom)
        F = Filling(tuple(r[0] for r in rows), tuple(r[1:] for r in rows))
        if F.kind != ("perm" if kind == "phi" else "big") or not admissible(kind, F, i):
            continue
        in_class = is_coinversion_free if kind == "phi" else is_inversion_free
        if in_class(F) and _apply_raw(kind, F, i) == G:
            found.append(F)
    return sorted(set(found), key=lambda F: (F.basement, F.rows))


def inverse(kind: str, G: Filling, i: int) -> Filling | None:
    """The unique preimage of G at rows i, i+1, or None; raises on ambiguity."""
    found = preimages(kind, G, i)
    if len(found) > 1:
        raise InvariantBreach(f"{kind} is not injective: {len(found)} preimages of\n{G}")
    return found[0] if found else None


def straighten(F: Filling) -> Filling:
    """The class filling of partition shape (w0 / big w0 basement) with F's column sets.

    F must be coinversion-free with the w0 basement, or inversion-free with
    a big basement. The result is rebuilt from the column sets directly.
    """
    n = F.n
    target = sort_partition(F.shape)
    if F.kind == "perm":
        if F.basement != longest_word(n) or not is_coinversion_free(F):
            raise ValueError("straighten needs a coinversion-free filling with decreasing basement")
        cls, basement = "coinvfree", longest_word(n)
    else:
        if not is_inversion_free(F):
            raise ValueError("straighten needs an inversion-free filling")
        cls, basement = "invfree", big_basement(longest_word(n))
    G = reconstruct(cls, column_sets(F), target, basement)
    if G is None:
        raise InvariantBreach(f"no {cls} filling of shape {target} with the column sets of\n{F}")
    if maj(G) != maj(F):
        raise InvariantBreach(f"straighten changed maj {maj(F)} -> {maj(G)}:\n{F}\n->\n{G}")
    return G


def straighten_by_maps(F: Filling) -> Filling:
    """Straighten by repeatedly inverting phi / psi on adjacent rows (slow path).

    For big basements this needs shape tau(lambda) over basement tau(w0), so
    that each rank ascent can be undone by a psi preimage.
    """
    kind = "phi" if F.kind == "perm" else "psi"
    while True:
        s, a = F.basement, F.shape
        if kind == "phi":
            spots = [i for i in range(F.n - 1) if a[i] < a[i + 1]]
        else:
            spots = [i for i in range(F.n - 1) if s[i] < s[i + 1]]
        if not spots:
            if kind == "phi" and not is_partition(a):
                raise InvariantBreach("stuck before reaching a partition shape")
            return F
        i = spots[0]
        if kind == "psi" and a[i] > a[i + 1]:
            raise ValueError("psi preimages only reach the big w0 basement when every "
                             "rank ascent sits on a weak shape ascent")
        prev = inverse(kind, F, i)
        if prev is None:
            raise InvariantBreach(f"no preimage at row {spots[0]} for\n{F}")
        F = prev


# -- the 2x3 grid audit ---------------------------------------------------
#
# A grid has three rows of two columns, rows ordered top to bottom:
#     a d
#     b e
#     c f
# with a row rank 1..3 per row giving the relative order of the row lengths
# (equal lengths give the lower row the lower rank, so ranks are distinct).
# Two adjacent rows are swapped, the upper of them being the longer one.

GRID_CATEGORIES = ("degenerate", "both-valid", "one-valid")


def _grid_triples(ranks, cells):
    """Triples (kind, a, b, c) among present cells; cells is {(r, c): value}."""
    out = []
    for r in range(3):
        a, b = (r, 0), (r, 1)
        if b not in cells:
            continue
        for r2 in range(r + 1, 3):
            if (r2, 1) in cells and ranks[r] > ranks[r2]:
                out.append(("A", a, b, (r2, 1)))
        for r2 in range(r):
            if ranks[r] > ranks[r2]:
                out.append(("B", a, b, (r2, 0)))
    return out


def _bad_triple(mode, va, vb, vc):
    from .stats import is_coinversion
    co = is_coinversion(va, vb, vc)
    return co if mode == "coinv" else not co


def _grid_bad(mode, ranks, cells, rows=None):
    """Offending triples; restricted to those touching ``rows`` when given."""
    bad = []
    for kind, a, b, c in _grid_triples(ranks, cells):
        if rows is not None and not {a[0], c[0]} & rows:
            continue
        if _bad_triple(mode, cells[a], cells[b], cells[c]):
            bad.append((kind, a, b, c))
    if mode == "coinv":
        # coinversion-free fillings are non-attacking, which a local grid
        # cannot infer from its missing basement, so it is imposed here
        for u, v in _grid_attacks(cells):
            if rows is None or {u[0], v[0]} & rows:
                bad.append(("attack", u, v))
    return bad


def _grid_attacks(cells):
    for (r, c), x in cells.items():
        for r2 in range(r + 1, 3):
            if cells.get((r2, c)) == x:
                yield (r, c), (r2, c)
            if c == 0 and cells.get((r2, 1)) == x:
                yield (r, c), (r2, 1)


def _condition(mode, d, e, f):
    if mode == "coinv":
        return e > d > f or d > f > e or f > e > d
    return e < d < f or d < f < e or f < e < d or (d == f and e != f)


def classify_grid(mode: str, ranks: Sequence[int], grid: Sequence[Sequence], swap: int) -> dict:
    """Classify one grid. ``grid`` is three (left, right) pairs, right may be None.

    ``swap`` is 0 (top two rows swapped) or 1 (bottom two). Returns a dict
    with ``category`` (one of GRID_CATEGORIES, "invalid-input" when the grid
    itself has an offending triple, or "neither-valid") and the candidates.
    """
    if mode not in ("coinv", "inv"):
        raise ValueError(f"unknown mode {mode!r}")
    p, q = swap, swap + 1
    fixed = 3 - p - q
    cells = {(r, c): grid[r][c] for r in range(3) for c in range(2) if grid[r][c] is not None}
    if _grid_bad(mode, ranks, cells):
        return {"category": "invalid-input"}
    choose = CHOICES["phi" if mode == "coinv" else "psi"]
    new_ranks = list(ranks)
    new_ranks[p], new_ranks[q] = ranks[q], ranks[p]
    degenerate = (q, 1) not in cells
    if degenerate:
        arrangements = [((None, grid[p][1]),)]
    else:
        d, e = grid[p][1], grid[q][1]
        # flipped: the new upper row carries e; kept: d stays on top
        arrangements = [((e, d),), ((d, e),)]
    results = []
    for ((top_right, bottom_right),) in arrangements:
        A, B = grid[p][0], grid[q][0]
        low = choose(A, B, bottom_right)
        high = B if low == A else A
        new = dict(cells)
        new[(p, 0)], new[(q, 0)] = high, low
        new.pop((p, 1), None)
        new.pop((q, 1), None)
        if top_right is not None:
            new[(p, 1)] = top_right
        new[(q, 1)] = bottom_right
        bad = _grid_bad(mode, new_ranks, new, rows={fixed})
        results.append({"grid": [[new.get((r, 0)), new.get((r, 1))] for r in range(3)],
                        "valid": not bad})
    out = {"candidates": results}
    valid = [r["valid"] for r in results]
    if degenerate:
        out["category"] = "degenerate" if all(valid) else "degenerate-invalid"
    elif all(valid):
        out["category"] = "both-valid"
    elif any(valid):
        out["category"] = "one-valid"
        out["survivor"] = "flipped" if valid[0] else "kept"
    else:
        out["category"] = "neither-valid"
    return out


def _one_valid_ok(mode, ranks, grid, swap, info) -> bool:
    ranks = tuple(ranks)
    if swap == 0 and ranks != (3, 1, 2) or swap == 1 and ranks != (2, 3, 1):
        return False
    d, e, f = (grid[r][1] for r in range(3))
    return _condition(mode, d, e, f) and info["survivor"] == "flipped"


def _grid_instances(first: int | None = None):
    """All (ranks, grid, swap): complete grids, plus degenerate ones."""
    values = range(1, 7)
    for ranks in itertools.permutations((1, 2, 3)):
        for swap in (0, 1):
            p, q = swap, swap + 1
            if ranks[p] < ranks[q]:
                continue
            for ent in itertools.product(values, repeat=6):
                if first is not None and ent[0] != first:
                    continue
                grid = [(ent[0], ent[1]), (ent[2], ent[3]), (ent[4], ent[5])]
                yield ranks, grid, swap
                # the shorter swapped row may end at the left column, making it the
                # shortest row; its missing right cell is emitted once (value slot 1)
                if ranks[q] == 1 and ent[2 * q + 1] == 1:
                    g = list(grid)
                    g[q] = (g[q][0], None)
                    yield ranks, g, swap


def _audit_shard(mode: str, first: int | None):
    counts = {}
    witnesses = []
    for ranks, grid, swap in _grid_instances(first):
        info = classify_grid(mode, ranks, grid, swap)
        cat = info["category"]
        if cat == "invalid-input":
            continue
        counts[cat] = counts.get(cat, 0) + 1
        problem = None
        if cat not in GRID_CATEGORIES:
            problem = "outside the three categories"
        elif cat == "one-valid" and not _one_valid_ok(mode, ranks, grid, swap, info):
            problem = "one-valid case violates the monotonicity condition"
        if problem and len(witnesses) < 20:
            witnesses.append({"problem": problem, "ranks": list(ranks), "swap": swap,
                              "grid": [list(r) for r in grid], **info})
    return counts, witnesses


def grid_audit(mode: str = "coinv", jobs: int = 1) -> dict:
    """Run the 2x3 grid audit for ``mode`` in {"coinv", "inv"}.

    Every grid in F with entries 1..6 and no offending triple is classified.
    Degenerate grids are those where the lower swapped row has no right cell.
    """
    if mode not in ("coinv", "inv"):
        raise ValueError(f"unknown mode {mode!r}")
    shards = list(range(1, 7))
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_audit_shard, [mode] * len(shards), shards))
    else:
        parts = [_audit_shard(mode, s) for s in shards]
    counts: dict = {}
    witnesses = []
    for c, w in parts:
        for k, v in c.items():
            counts[k] = counts.get(k, 0) + v
        witnesses.extend(w)
    return {"mode": mode, "passed": not witnesses, "counts": dict(sorted(counts.items())),
            "witnesses": witnesses[:20]}
