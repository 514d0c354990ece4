"""Fillings of augmented diagrams: statistics, column-set preserving maps,
charge/cocharge words and the t=0 specializations of permuted-basement
Macdonald polynomials, with exhaustive verification suites."""

from .core import (Filling, INF, act, big_basement, column_sets, conjugate, inf, longest_word,
                   sort_partition)
from .enumeration import enumerate_fillings, reconstruct
from .poly import Poly, elementary, schur
from .specializations import e_t0, htilde, htilde_t0, key, modified_hl
from .stats import coinv, inv, is_coinversion_free, is_inversion_free, maj
from .colmaps import apply_in_filling, grid_audit, phi_two_row, psi_two_row, straighten
from .words import ccw, charge, cocharge, cw, rsk, subword_decomposition

__version__ = "0.1.0"
