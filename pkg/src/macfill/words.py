"""Biwords, charge/cocharge words, standard subwords, charge, cocharge and dual RSK."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Filling

Word = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Biword:
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    convention: str  # "charge" or "cocharge"

    def pairs(self):
        return list(zip(self.top, self.bottom))


def charge_biword(filling: Filling) -> Biword:
    """Non-basement entries ascending over their columns; ties by column, decreasing.

    Columns are numbered from 1 at the first column right of the basement.
    """
    pairs = [(v, c) for row in filling.rows for c, v in enumerate(row, 1)]
    pairs.sort(key=lambda p: (p[0], -p[1]))
    return Biword(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), "charge")


def cocharge_biword(filling: Filling) -> Biword:
    """All entries, basement included, descending over their columns; ties increasing.

    Here the basement is column 1. A big basement is first materialized to
    finite letters above every entry.
    """
    F = filling.materialize()
    pairs = [(v, c) for r, row in enumerate(F.augmented_rows()) for c, v in enumerate(row, 1)]
    pairs.sort(key=lambda p: (-p[0], p[1]))
    return Biword(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs), "cocharge")


def cw(filling: Filling) -> Word:
    return charge_biword(filling).bottom


def ccw(filling: Filling) -> Word:
    return cocharge_biword(filling).bottom


def subword_decomposition(word: Sequence[int]) -> list[Word]:
    """Split a word into standard subwords.

    Each pass takes the rightmost 1, then searches leftward (wrapping around
    past the start of the word) for a 2, from there for a 3, and so on while
    the next letter is still available. The chosen letters, in their order
    within the word, form one subword.
    """
    word = tuple(word)
    alive = list(range(len(word)))
    out = []
    while alive:
        ones = [p for p in alive if word[p] == 1]
        if not ones:
            raise ValueError(f"cannot decompose {word}: no letter 1 left among "
                             f"{[word[p] for p in alive]}")
        chosen = [ones[-1]]
        current = ones[-1]
        k = 2
        while True:
            left = [p for p in alive if p < current and word[p] == k]
            if left:
                current = left[-1]
            else:
                right = [p for p in alive if p > current and word[p] == k]
                if not right:
                    break
                current = right[-1]
            chosen.append(current)
            k += 1
        chosen_set = set(chosen)
        out.append(tuple(word[p] for p in sorted(chosen)))
        alive = [p for p in alive if p not in chosen_set]
    return out


def _check_standard(w: Sequence[int]):
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{tuple(w)} is not a permutation of 1..{len(w)}")


def _maj(seq: Sequence[int]) -> int:
    return sum(i for i in range(1, len(seq)) if seq[i - 1] > seq[i])


def inverse(w: Sequence[int]) -> Word:
    _check_standard(w)
    out = [0] * len(w)
    for pos, v in enumerate(w, 1):
        out[v - 1] = pos
    return tuple(out)


def charge_standard(w: Sequence[int]) -> int:
    """charge(w) = maj(reverse(w^{-1})) for a permutation w."""
    return _maj(tuple(reversed(inverse(w))))


def charge_index(w: Sequence[int]) -> int:
    """Index rule: index(1) = 0, and index(k+1) gains 1 when k+1 sits right of k."""
    _check_standard(w)
    pos = {v: p for p, v in enumerate(w)}
    total = index = 0
    for k in range(1, len(w)):
        if pos[k + 1] > pos[k]:
            index += 1
        total += index
    return total


def cocharge_standard(w: Sequence[int]) -> int:
    """Index rule with the opposite step: index(k+1) gains 1 when k+1 sits left of k."""
    _check_standard(w)
    pos = {v: p for p, v in enumerate(w)}
    total = index = 0
    for k in range(1, len(w)):
        if pos[k + 1] < pos[k]:
            index += 1
        total += index
    return total


def charge(word: Sequence[int]) -> int:
    return sum(charge_standard(s) for s in subword_decomposition(word))


def cocharge(word: Sequence[int]) -> int:
    return sum(cocharge_standard(s) for s in subword_decomposition(word))


# -- tableaux and RSK ----------------------------------------------------

def shape_of(tableau: Tableau) -> tuple[int, ...]:
    return tuple(len(r) for r in tableau)


def transpose(tableau: Tableau) -> Tableau:
    if not tableau:
        return ()
    width = len(tableau[0])
    return tuple(tuple(row[c] for row in tableau if len(row) > c) for c in range(width))


def is_semistandard(tableau: Tableau) -> bool:
    for r, row in enumerate(tableau):
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if r and (len(row) > len(tableau[r - 1])
                  or any(row[c] <= tableau[r - 1][c] for c in range(len(row)))):
            return False
    return True


def content(tableau: Tableau) -> tuple[int, ...]:
    letters = [v for row in tableau for v in row]
    top = max(letters, default=0)
    return tuple(letters.count(k) for k in range(1, top + 1))


def reading_word(tableau: Tableau) -> Word:
    """Rows from bottom to top, each read left to right."""
    return tuple(v for row in reversed(tableau) for v in row)


def charge_tableau(tableau: Tableau) -> int:
    return charge(reading_word(tableau))


def row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted row insertion in place; returns the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        for c, y in enumerate(row):
            if y > x:
                row[c], x = x, y
                break
        else:
            row.append(x)
            return r, len(row) - 1
        r += 1


def rsk(biword: Biword) -> tuple[Tableau, Tableau]:
    """Dual RSK for biwords whose tie blocks have strictly decreasing bottoms.

    The bottom letters are row-inserted into P. Each tie block of the top
    row adds a vertical strip, so recording top letters in the new cells and
    transposing gives a semistandard Q of shape conjugate to P.
    """
    top, bottom = biword.top, biword.bottom
    if len(top) != len(bottom):
        raise ValueError("biword rows differ in length")
    for k in range(1, len(top)):
        if top[k] < top[k - 1] or (top[k] == top[k - 1] and bottom[k] >= bottom[k - 1]):
            raise ValueError("biword violates the charge convention "
                             "(top ascending, ties with strictly decreasing bottom)")
    P: list[list[int]] = []
    R: list[list[int]] = []
    for i, j in zip(top, bottom):
        r, c = row_insert(P, j)
        if r == len(R):
            R.append([])
        R[r].append(i)
        assert len(R[r]) == c + 1
    P_t = tuple(tuple(row) for row in P)
    Q = transpose(tuple(tuple(row) for row in R))
    return P_t, Q


def rsk_filling(filling: Filling) -> tuple[Tableau, Tableau]:
    return rsk(charge_biword(filling))
