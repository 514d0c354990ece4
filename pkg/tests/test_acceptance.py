"""Acceptance criteria at their full bounds, one summary line per criterion.

Worker processes come from $MF_JOBS (default 1).
"""

import os

from macfill import verify
from macfill.colmaps import grid_audit
from macfill.enumeration import enumerate_fillings
from macfill.stats import coinv, maj
from macfill.words import ccw, charge, charge_standard, cocharge, cw, subword_decomposition

from fixtures import (CHARGE_FILLING, CHARGE_WORD, COCHARGE_FILLING, COCHARGE_WORD, EX22,
                      EX22_BASEMENT, EX22_COINV, EX22_MAJ)
from test_verify import KEY_TABLES, Q_POWERS, TABLEAUX, _digits

JOBS = max(1, int(os.environ.get("MF_JOBS", "1") or 1))


def _assert_report(report):
    assert report.passed, report.to_obj()


def test_01_naf_example(criterion):
    with criterion(1, "NAF((1,0,2,2),(2,1,3,4)) is the displayed list of 8", budget=1):
        got = list(enumerate_fillings("naf", (1, 0, 2, 2), EX22_BASEMENT))
        assert len(got) == 8 and set(got) == set(EX22)
        assert tuple(coinv(F) for F in EX22) == EX22_COINV
        assert tuple(maj(F) for F in EX22) == EX22_MAJ


def test_02_charge_and_cocharge_words(criterion):
    with criterion(2, "charge word, subwords and cocharge word displays", budget=1):
        assert cw(CHARGE_FILLING) == CHARGE_WORD
        w = tuple(_digits("1322133241214"))
        subs = subword_decomposition(w)
        assert subs == [tuple(_digits(s)) for s in ("3214", "3241", "321", "12")]
        assert charge(w) == 3 and [charge_standard(s) for s in subs] == [1, 1, 0, 1]
        assert ccw(COCHARGE_FILLING) == COCHARGE_WORD and cocharge(COCHARGE_WORD) == 5


def test_03_map_suites(criterion):
    with criterion(3, "phi/psi preserve column sets, maj and class; phi bijective", budget=600):
        _assert_report(verify.suite_maps(n=4, size=5, jobs=JOBS))


def test_04_uniqueness(criterion):
    with criterion(4, "column sets determine CoInvFree/InvFree fillings", budget=300):
        _assert_report(verify.suite_uniqueness(n=4, size=6, jobs=JOBS))


def test_05_charge_theorem(criterion):
    with criterion(5, "charge(cw(F)) = maj(F)", budget=600):
        _assert_report(verify.suite_charge(n=4, size=6, jobs=JOBS))


def test_06_cocharge_theorem(criterion):
    with criterion(6, "cocharge(ccw(F)) = maj(F) over all tau", budget=600):
        _assert_report(verify.suite_cocharge(n=4, size=6, jobs=JOBS))


def test_07_schur_expansion(criterion):
    with criterion(7, "Schur expansion of E_lambda(x;q,0), q=1 and key checks", budget=600):
        _assert_report(verify.suite_schur_expansion(n=4, size=6, jobs=JOBS))


def test_08_hall_littlewood_basement(criterion):
    with criterion(8, "H~ with basement tau w0 equals H~_lambda at t=0", budget=900):
        _assert_report(verify.suite_hall_littlewood_basement(n=4, size=4, jobs=JOBS))


def test_09_operator_identities(criterion):
    with criterion(9, "operator relations and E = pi E decomposition", budget=300):
        report = verify.suite_operators(n=4, size=5, jobs=JOBS, seed=0, cases=100)
        _assert_report(report)
        assert report.details["decomposition_instances"] > 0


def test_10_grid_audit(criterion):
    with criterion(10, "2x3 grid audit, both modes, zero violations", budget=300):
        for mode in ("coinv", "inv"):
            report = grid_audit(mode, jobs=JOBS)
            assert report["passed"] and not report["witnesses"], report


def test_11_conjecture_harnesses(criterion):
    with criterion(11, "key-expansion tables and conjecture harness reports", budget=1200):
        for alpha, gammas in KEY_TABLES.items():
            table = verify.key_expansion_table(alpha)
            assert not table["problems"]
            got = sorted((r["charge"], r["gamma"], r["P"]) for r in table["terms"])
            assert got == sorted((q, _digits(g), P) for q, g, P in zip(Q_POWERS, gammas, TABLEAUX))
        key = verify.conjecture_key_expansion(n=4, size=5, jobs=JOBS)
        assert key.status == "pass-at-bounds" or (key.status == "counterexample" and key.witnesses)
        cols = verify.conjecture_column_sets(n=3, size=4, jobs=JOBS)
        assert cols.status == "pass-at-bounds", cols.to_obj()
