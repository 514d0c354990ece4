import pytest

from macfill import verify
from macfill.demazure import pi
from macfill.poly import Poly
from macfill.specializations import e_t0
from macfill.words import charge, charge_tableau, cocharge


def _digits(s):
    return [int(ch) for ch in s]


# (q-power, key index, tableau rows) in displayed order
TABLEAUX = [[[1, 1], [2, 2], [3]], [[1, 1, 2], [2], [3]], [[1, 1, 3], [2, 2]],
            [[1, 1, 2], [2, 3]]]
KEY_TABLES = {
    (3, 2, 0): ["320", "311", "221", "221"],
    (2, 0, 3): ["203", "113", "212", "221"],
    (0, 2, 3): ["023", "113", "122", "221"],
}
Q_POWERS = [0, 1, 1, 2]


@pytest.mark.parametrize("alpha", sorted(KEY_TABLES))
def test_key_expansion_tables(alpha):
    table = verify.key_expansion_table(alpha)
    assert table["problems"] == []
    got = sorted((r["charge"], r["gamma"], r["P"]) for r in table["terms"])
    want = sorted((q, _digits(g), P) for q, g, P in zip(Q_POWERS, KEY_TABLES[alpha], TABLEAUX))
    assert got == want


SMALL = dict(n=3, size=3)


@pytest.mark.parametrize("name", sorted(verify.SUITES))
def test_suites_pass_at_small_bounds(name):
    report = verify.SUITES[name](**SMALL)
    assert report.passed, report.witnesses
    assert report.status == "pass" and report.checked > 0


@pytest.mark.parametrize("name", sorted(verify.CONJECTURES))
def test_conjectures_hold_at_small_bounds(name):
    report = verify.CONJECTURES[name](**SMALL)
    assert report.status == "pass-at-bounds"


def test_relations_on_random_polynomials():
    assert verify.operator_relations(seed=7, cases=30) == []


def test_charge_suite_catches_an_off_by_one():
    def broken(w):
        return charge(w) + (1 if len(w) > 4 else 0)

    report = verify.suite_charge(n=3, size=5, charge_fn=broken)
    assert not report.passed and report.witnesses
    assert report.to_obj()["status"] == "fail"


def test_cocharge_suite_catches_an_off_by_one():
    def broken(w):
        return cocharge(w) + (1 if w.count(1) > 1 else 0)

    assert not verify.suite_cocharge(n=3, size=3, cocharge_fn=broken).passed


def test_schur_suite_catches_a_bad_tableau_charge():
    def broken(P):
        return charge_tableau(P) + (1 if len(P) == 1 else 0)

    assert not verify.suite_schur_expansion(n=3, size=3, charge_fn=broken).passed


def test_operator_suite_catches_a_dropped_monomial():
    def broken(alpha, sigma):
        p = e_t0(alpha, sigma)
        if sum(alpha) == 2 and p:
            (qe, te, xe), c = p.sorted_terms()[-1]
            p = p - Poly.monomial(p.n, xe, qe, te, c)
        return p

    report = verify.suite_operators(n=3, size=2, cases=5, e_func=broken)
    assert not report.passed


def test_literal_variable_choice_for_the_operator_identity_fails():
    # acting on x_1, x_2 with the smaller part on top does not give E
    lhs = e_t0((0, 1), (2, 1))
    assert lhs != pi(e_t0((1, 0), (2, 1)), 1)
    # the larger part on top with variables named by the basement does
    assert e_t0((1, 0), (2, 1)) == pi(e_t0((0, 1), (2, 1)), 1)


def test_ttop_reports_empty_classes_as_notes():
    report = verify.check_ttop_remark(n=2, size=2)
    assert report.passed
    assert report.details.get("notes", 0) > 0


def test_top_coefficient():
    t, q = Poly.t(1), Poly.q(1)
    p = 1 + q * t + 3 * t * t
    assert verify.top_t_coefficient(p) == 3 * Poly.one(1)


def test_suites_are_deterministic():
    a = verify.suite_cocharge(n=3, size=3).to_obj()
    b = verify.suite_cocharge(n=3, size=3).to_obj()
    assert a == b


def test_failures_carry_witnesses():
    def broken(w):
        return charge(w) + 1

    report = verify.suite_charge(n=2, size=2, charge_fn=broken)
    obj = report.to_obj()
    assert obj["failures"] >= 1
    w = obj["witnesses"][0]
    assert "filling" in w or "shape" in w, w
