"""A short walk through the library on small worked examples.

Run with ``python demos/tour.py``.
"""

from macfill import colmaps, specializations, verify, words
from macfill.core import Filling, big_basement, column_sets
from macfill.enumeration import enumerate_fillings
from macfill.poly import schur
from macfill.stats import coinv, maj


def show(title):
    print()
    print(title)
    print("-" * len(title))


show("Non-attacking fillings of shape (1,0,2,2) over basement (2,1,3,4)")
for F in enumerate_fillings("naf", (1, 0, 2, 2), (2, 1, 3, 4)):
    print(F.rows, "coinv", coinv(F), "maj", maj(F))
print("E(x;q,0) =", specializations.e_t0((1, 0, 2, 2), (2, 1, 3, 4)))

show("Charge word of a coinversion-free filling")
F = Filling((4, 3, 2, 1), ((3, 3, 2, 1, 3), (2, 2, 1), (1, 4), ()))
w = words.cw(F)
print("cw =", w)
print("subwords =", words.subword_decomposition(w))
print("charge =", words.charge(w), " maj =", maj(F))

show("Moving a long row down with phi keeps the column sets")
G = Filling((3, 2, 1), ((3, 1), (2,), ()))
H = colmaps.apply_in_filling("phi", G, 0)
print(G.rows, G.basement, "->", H.rows, H.basement)
print("column sets", column_sets(G)[1:], "==", column_sets(H)[1:])

show("Straightening an inversion-free filling with a permuted big basement")
I = next(iter(enumerate_fillings("invfree", (1, 2, 0), big_basement((2, 3, 1)))))
J = colmaps.straighten(I)
print(I.rows, "->", J.rows, " maj", maj(I), maj(J))

show("Key expansion of E_(2,0,3)(x;q,0)")
for row in verify.key_expansion_table((2, 0, 3))["terms"]:
    print(f"q^{row['charge']} K_{tuple(row['gamma'])}   P = {row['P']}")

show("Keys of partition shape are Schur polynomials")
print("K_(3,2,0) == s_(3,2):", specializations.key((3, 2, 0)) == schur((3, 2), 3))
