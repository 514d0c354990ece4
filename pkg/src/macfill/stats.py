"""Filling statistics: attacking pairs, descents, leg, arm, maj, triples, inv, coinv.

Rows are 0-based from the top and column 0 is the basement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import Filling

Cell = tuple[int, int]

# tie-break subscripts of the three boxes of a triple
_SUB_A, _SUB_B, _SUB_C = 3, 1, 2


@dataclass(frozen=True)
class TripleInstance:
    kind: str  # "A" or "B"
    a: Cell
    b: Cell
    c: Cell
    orientation: str  # "inversion" or "coinversion"


@lru_cache(maxsize=None)
def triple_cells(shape: tuple[int, ...]) -> tuple[tuple[str, Cell, Cell, Cell], ...]:
    """Every type A / type B triple of the augmented diagram, as cell coordinates.

    Type A: a immediately left of b, c strictly below b, row(a) at least as long as row(c).
    Type B: a immediately left of b, c strictly above a, row(a) strictly longer than row(c).
    """
    out = []
    n = len(shape)
    for r in range(n):
        for col in range(1, shape[r] + 1):
            a, b = (r, col - 1), (r, col)
            for r2 in range(r + 1, n):
                if shape[r2] >= col and shape[r] >= shape[r2]:
                    out.append(("A", a, b, (r2, col)))
            for r2 in range(r):
                if shape[r2] >= col - 1 and shape[r] > shape[r2]:
                    out.append(("B", a, b, (r2, col - 1)))
    return tuple(out)


def _orientation_sign(p1: Cell, p2: Cell, p3: Cell) -> int:
    """Sign of the turn p1 -> p2 -> p3 as drawn on the page.

    Cells are (row, col); the page has x = col to the right and y = row
    downward. Returns +1 for a counter-clockwise turn as seen by a reader.
    """
    (y1, x1), (y2, x2), (y3, x3) = p1, p2, p3
    cross = (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)
    # y points down, so a positive cross product is clockwise on the page
    return -1 if cross > 0 else 1


def classify_triple(kind: str, a: Cell, b: Cell, c: Cell, va: int, vb: int, vc: int) -> str:
    """Inversion/coinversion by sorting the boxes and reading their orientation."""
    boxes = sorted([((va, _SUB_A), a), ((vb, _SUB_B), b), ((vc, _SUB_C), c)])
    sign = _orientation_sign(boxes[0][1], boxes[1][1], boxes[2][1])
    if kind == "A":
        return "inversion" if sign > 0 else "coinversion"
    return "inversion" if sign < 0 else "coinversion"


def is_coinversion(va: int, vb: int, vc: int) -> bool:
    """Coinversion test for a triple with entries (a, b, c), either type.

    Both triple types reduce to: coinversion iff the increasing order of
    the keyed entries is a cyclic rotation of (a, b, c). This is the hot
    path used by the enumerators; ``classify_triple`` is the geometric check.
    """
    ka, kb, kc = (va, _SUB_A), (vb, _SUB_B), (vc, _SUB_C)
    return ka < kb < kc or kb < kc < ka or kc < ka < kb


def triples(filling: Filling) -> list[TripleInstance]:
    out = []
    for kind, a, b, c in triple_cells(filling.shape):
        orient = classify_triple(kind, a, b, c,
                                 filling.entry(*a), filling.entry(*b), filling.entry(*c))
        out.append(TripleInstance(kind, a, b, c, orient))
    return out


def coinv(filling: Filling) -> int:
    e = filling.entry
    return sum(1 for _, a, b, c in triple_cells(filling.shape)
               if is_coinversion(e(*a), e(*b), e(*c)))


def inv(filling: Filling) -> int:
    return len(triple_cells(filling.shape)) - coinv(filling)


def descents(filling: Filling) -> list[Cell]:
    out = []
    for r, row in enumerate(filling.rows):
        left = filling.basement[r]
        for c, v in enumerate(row, 1):
            if v > left:
                out.append((r, c))
            left = v
    return out


def leg(shape: Sequence[int], r: int, c: int) -> int:
    """Number of boxes right of (r, c); for a basement box this is the row length."""
    if not 0 <= c <= shape[r]:
        raise ValueError(f"({r}, {c}) is outside the diagram")
    return shape[r] - c


def arm(shape: Sequence[int], r: int, c: int) -> int:
    if not (0 <= r < len(shape) and 1 <= c <= shape[r]):
        raise ValueError(f"({r}, {c}) is not a non-basement box of {tuple(shape)}")
    below = sum(1 for r2 in range(r + 1, len(shape)) if shape[r2] >= c and shape[r2] <= shape[r])
    above = sum(1 for r2 in range(r) if shape[r2] >= c - 1 and shape[r2] < shape[r])
    return below + above


def maj(filling: Filling) -> int:
    total = 0
    for r, row in enumerate(filling.rows):
        left = filling.basement[r]
        length = len(row)
        for c, v in enumerate(row, 1):
            if v > left:
                total += length - c + 1
            left = v
    return total


def attacking_pair(filling: Filling) -> tuple[Cell, Cell] | None:
    """A witness pair of attacking boxes, or None if the filling is non-attacking."""
    shape = filling.shape
    n = filling.n
    width = max(shape, default=0)
    for c in range(width + 1):
        rows_here = [r for r in range(n) if shape[r] >= c]
        seen: dict[int, int] = {}
        for r in rows_here:
            v = filling.entry(r, c)
            if v in seen:
                return (seen[v], c), (r, c)
            seen[v] = r
        if c == width:
            break
        for r in rows_here:
            v = filling.entry(r, c)
            for r2 in range(r + 1, n):
                if shape[r2] >= c + 1 and filling.entry(r2, c + 1) == v:
                    return (r, c), (r2, c + 1)
    return None


def is_attacking(filling: Filling) -> bool:
    return attacking_pair(filling) is not None


def is_coinversion_free(filling: Filling) -> bool:
    e = filling.entry
    return not any(is_coinversion(e(*a), e(*b), e(*c)) for _, a, b, c in triple_cells(filling.shape))


def is_inversion_free(filling: Filling) -> bool:
    e = filling.entry
    return all(is_coinversion(e(*a), e(*b), e(*c)) for _, a, b, c in triple_cells(filling.shape))


def summary(filling: Filling) -> dict:
    """JSON-ready statistics; coordinates use 1-based rows."""
    witness = attacking_pair(filling)
    return {
        "maj": maj(filling),
        "inv": inv(filling),
        "coinv": coinv(filling),
        "attacking": witness is not None,
        "attacking_pair": None if witness is None else [[r + 1, c] for r, c in witness],
        "descents": [[r + 1, c] for r, c in descents(filling)],
    }
