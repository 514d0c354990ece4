"""Fillings transcribed from the worked examples of the source text."""

from macfill.core import Filling, big_basement

# NAF((1,0,2,2), (2,1,3,4)) in display order, with coinv and maj as printed
EX22_BASEMENT = (2, 1, 3, 4)
EX22_ROWS = [
    ((1,), (), (3, 2), (4, 4)),
    ((1,), (), (3, 3), (4, 2)),
    ((1,), (), (3, 3), (4, 4)),
    ((1,), (), (3, 4), (4, 2)),
    ((2,), (), (3, 1), (4, 4)),
    ((2,), (), (3, 3), (4, 1)),
    ((2,), (), (3, 3), (4, 4)),
    ((2,), (), (3, 4), (4, 1)),
]
EX22 = [Filling(EX22_BASEMENT, rows) for rows in EX22_ROWS]
EX22_COINV = (0, 0, 0, 2, 1, 1, 0, 3)
EX22_MAJ = (0, 0, 0, 1, 0, 0, 0, 1)

# the charge-word display: basement w0, shape (5, 3, 2, 0)
CHARGE_FILLING = Filling((4, 3, 2, 1), ((3, 3, 2, 1, 3), (2, 2, 1), (1, 4), ()))
CHARGE_WORD = (4, 3, 1, 3, 2, 1, 5, 2, 1, 2)

# the cocharge-word display: big basement with ranks (2,4,3,1), shape (1,4,3,0)
COCHARGE_FILLING = Filling(big_basement((2, 4, 3, 1)), ((1,), (1, 4, 2, 3), (2, 1, 3), ()))
COCHARGE_WORD = (1, 1, 1, 1, 3, 4, 5, 2, 4, 2, 2, 3)
