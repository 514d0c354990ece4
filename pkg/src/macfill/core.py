"""Compositions, basements, augmented fillings and column sets.

Entries are plain ``int``s. Finite entries are the positive integers; the
ranked infinity of a big basement is encoded as ``INF + rank`` so that the
native integer order is exactly the entry order (every finite entry is below
every infinity, and infinities compare by rank).

Coordinates are 0-based internally: row ``r`` counts from the top, column 0
is the basement and column ``c >= 1`` holds ``rows[r][c - 1]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .poly import Poly

INF = 1_000_000


def inf(rank: int) -> int:
    if rank < 1:
        raise ValueError("infinity rank must be positive")
    return INF + rank


def is_inf(entry: int) -> bool:
    return entry > INF


def rank_of(entry: int) -> int:
    if not is_inf(entry):
        raise ValueError(f"{entry} is not an infinity")
    return entry - INF


def entry_str(entry: int) -> str:
    return f"inf{entry - INF}" if is_inf(entry) else str(entry)


# -- compositions --------------------------------------------------------

def check_composition(alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if not alpha:
        raise ValueError("composition must have at least one part")
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative part in {alpha}")
    return alpha


def is_partition(alpha: Sequence[int]) -> bool:
    return all(alpha[i] >= alpha[i + 1] for i in range(len(alpha) - 1))


def sort_partition(alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(alpha, reverse=True))


def conjugate(alpha: Sequence[int]) -> tuple[int, ...]:
    """Conjugate of sort(alpha), without trailing zeros."""
    top = max(alpha, default=0)
    return tuple(sum(1 for a in alpha if a >= c) for c in range(1, top + 1))


def compositions(size: int, parts: int):
    """All compositions of ``size`` into exactly ``parts`` non-negative parts."""
    if parts == 1:
        yield (size,)
        return
    for first in range(size, -1, -1):
        for rest in compositions(size - first, parts - 1):
            yield (first,) + rest


def partitions(size: int, max_part: int | None = None):
    """Partitions of ``size`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions(size - first, first):
            yield (first,) + rest


def pad(parts: Sequence[int], n: int) -> tuple[int, ...]:
    if len(parts) > n:
        raise ValueError(f"{parts} has more than {n} parts")
    return tuple(parts) + (0,) * (n - len(parts))


def rearrangements(alpha: Sequence[int]):
    """Distinct permutations of ``alpha`` in lexicographic order."""
    items = sorted(alpha)
    n = len(items)
    used = [False] * n
    current: list[int] = []

    def rec():
        if len(current) == n:
            yield tuple(current)
            return
        prev = None
        for i in range(n):
            if used[i] or items[i] == prev:
                continue
            prev = items[i]
            used[i] = True
            current.append(items[i])
            yield from rec()
            current.pop()
            used[i] = False

    yield from rec()


# -- basements -----------------------------------------------------------

def longest_word(n: int) -> tuple[int, ...]:
    """w0 = (n, ..., 2, 1)."""
    return tuple(range(n, 0, -1))


def perm_basement(values: Sequence[int]) -> tuple[int, ...]:
    values = tuple(int(v) for v in values)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"basement {values} is not a permutation of 1..{len(values)}")
    return values


def big_basement(ranks: Sequence[int]) -> tuple[int, ...]:
    ranks = perm_basement(ranks)
    return tuple(inf(r) for r in ranks)


def basement_kind(basement: Sequence[int]) -> str:
    if all(is_inf(b) for b in basement):
        return "big"
    if any(is_inf(b) for b in basement):
        raise ValueError("basement mixes finite entries and infinities")
    return "perm"


def act(perm: Sequence[int], seq: Sequence):
    """Rearrange ``seq`` by a permutation: result[i] = seq[perm[i] - 1].

    Used for both tau*lambda and tau*w0 so that a row keeps its basement
    partner.
    """
    return tuple(seq[p - 1] for p in perm)


def simple_swap(seq: Sequence, i: int):
    """s_i acting on positions i, i+1 (1-based)."""
    seq = list(seq)
    seq[i - 1], seq[i] = seq[i], seq[i - 1]
    return tuple(seq)


# -- fillings ------------------------------------------------------------

@dataclass(frozen=True)
class Filling:
    """An augmented filling: a basement column plus one row of entries per basement cell."""

    basement: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "basement", tuple(self.basement))
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if len(self.rows) != len(self.basement):
            raise ValueError(
                f"{len(self.rows)} rows but basement has {len(self.basement)} cells")
        if not self.basement:
            raise ValueError("empty basement")
        basement_kind(self.basement)
        for row in self.rows:
            for v in row:
                if v < 1 or is_inf(v):
                    raise ValueError(f"non-basement entry {v} must be a positive finite integer")

    @property
    def n(self) -> int:
        return len(self.basement)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def kind(self) -> str:
        return basement_kind(self.basement)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, r: int, c: int) -> int:
        return self.basement[r] if c == 0 else self.rows[r][c - 1]

    def augmented_rows(self) -> list[tuple[int, ...]]:
        return [(b,) + row for b, row in zip(self.basement, self.rows)]

    def weight(self) -> list[int]:
        """Multiset of non-basement entries, as sorted list."""
        return sorted(v for row in self.rows for v in row)

    def with_rows(self, basement=None, rows=None) -> Filling:
        return Filling(self.basement if basement is None else basement,
                       self.rows if rows is None else rows)

    def materialize(self, offset: int | None = None) -> Filling:
        """Replace infinity of rank r by the finite letter offset + r.

        The default offset is n + 1, which keeps every basement letter above
        every entry in 1..n.
        """
        if self.kind != "big":
            return self
        if offset is None:
            offset = max(self.n, max((v for r in self.rows for v in r), default=0)) + 1
        return Filling(tuple(offset + rank_of(b) for b in self.basement), self.rows)

    def __str__(self):
        lines = []
        for row in self.augmented_rows():
            lines.append(" ".join(entry_str(v) for v in row))
        return "\n".join(lines)


def column_sets(filling: Filling) -> tuple[tuple[int, ...], ...]:
    """Per-column multisets (as sorted tuples); index 0 is the basement column."""
    width = max(filling.shape, default=0)
    cols = [sorted(filling.basement)]
    for c in range(1, width + 1):
        cols.append(sorted(row[c - 1] for row in filling.rows if len(row) >= c))
    return tuple(tuple(col) for col in cols)


def weight_monomial(filling: Filling, n: int | None = None) -> Poly:
    """x^F: product of x_v over the non-basement entries v."""
    n = filling.n if n is None else n
    x = [0] * n
    for row in filling.rows:
        for v in row:
            if v > n:
                raise ValueError(f"entry {v} exceeds variable count {n}")
            x[v - 1] += 1
    return Poly.monomial(n, x)


# -- JSON ----------------------------------------------------------------

def filling_to_obj(filling: Filling) -> dict:
    kind = filling.kind
    values = [rank_of(b) for b in filling.basement] if kind == "big" else list(filling.basement)
    return {"basement": {"kind": kind, "values": values},
            "rows": [list(r) for r in filling.rows]}


def encode_filling(filling: Filling) -> str:
    return json.dumps(filling_to_obj(filling))


def filling_from_obj(obj) -> Filling:
    try:
        base = obj["basement"]
        if isinstance(base, list):
            # shorthand: a bare permutation is a permutation basement
            base = {"kind": "perm", "values": base}
        kind = base["kind"]
        values = base["values"]
        rows = obj["rows"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed filling JSON: missing {exc}") from None
    if not isinstance(values, list) or not isinstance(rows, list):
        raise ValueError("basement values and rows must be lists")
    if kind == "perm":
        basement = perm_basement(values)
    elif kind == "big":
        basement = big_basement(values)
    else:
        raise ValueError(f"unknown basement kind {kind!r}")
    if len(rows) != len(basement):
        raise ValueError(f"{len(rows)} rows for a basement of length {len(basement)}")
    n = len(basement)
    clean = []
    for row in rows:
        if not isinstance(row, list):
            raise ValueError("each row must be a list")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise ValueError(f"entry {v!r} outside 1..{n}")
        clean.append(tuple(row))
    return Filling(basement, tuple(clean))


def decode_filling(text: str) -> Filling:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None
    return filling_from_obj(obj)


def _entry_to_obj(v: int):
    return {"inf": rank_of(v)} if is_inf(v) else v


def _entry_from_obj(v) -> int:
    if isinstance(v, dict):
        return inf(int(v["inf"]))
    if isinstance(v, int) and not isinstance(v, bool) and v >= 1:
        return v
    raise ValueError(f"bad entry {v!r}")


def encode_column_sets(cols: Iterable[Iterable[int]]) -> str:
    return json.dumps({"columns": [[_entry_to_obj(v) for v in col] for col in cols]})


def decode_column_sets(text: str) -> tuple[tuple[int, ...], ...]:
    try:
        obj = json.loads(text)
        cols = obj["columns"]
        return tuple(tuple(sorted(_entry_from_obj(v) for v in col)) for col in cols)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ValueError(f"malformed column sets JSON: {exc}") from None
