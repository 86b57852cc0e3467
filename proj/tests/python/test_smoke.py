import json
from fractions import Fraction

import pytest

import baileykit as bk


def test_pochhammer_and_qbinom():
    f = bk.poch("q", 3, bk.EXACT_ORDER)
    assert bk.q_coefficients(f) == [1, -1, -1, 0, 1, 1, -1]
    assert bk.q_coefficients(bk.qbinom(4, 2)) == [1, 1, 2, 1, 1]
    g = bk.poch(2, -1, 20)
    assert g.valuation == 2
    assert g.coeff(2) == Fraction(-1, 2)
    with pytest.raises(bk.ZeroSeriesInversion):
        bk.poch("q", -1, 20)
    with pytest.raises(bk.FormalDivergence):
        bk.poch_inf(2, 10)


def test_series_arithmetic():
    one_minus_q = bk.Series.constant(1) - bk.Series.monomial(1, 2)
    inv = one_minus_q.inverse(20)
    assert bk.q_coefficients(inv, 10) == [1] * 11
    assert bk.q_coefficients(one_minus_q * inv, 10) == [1] + [0] * 10
    assert bk.poch_inf("q", 60) == bk.pentagonal_expansion(60)


def test_monomial_grammar():
    m = bk.Monomial("-3/2q^(5/2)")
    assert m.coeff == Fraction(-3, 2)
    assert m.texp == 5
    assert str(m) == "-3/2q^(5/2)"
    assert bk.Monomial("inf").is_infinite
    with pytest.raises(bk.ParseError):
        bk.Monomial("2x")


def test_partitions():
    rr = bk.count_partitions(lambda p: p % 5 in (1, 4), 30)
    gap = bk.count_partitions(lambda p: True, 30, min_difference=2)
    assert rr == gap
    assert bk.count_partitions(lambda p: True, 5)[5] == 7


def test_pairs():
    assert bk.check_pair(bk.shifted_pair(3), -4, 6, 40)
    lemma = bk.apply_lemma(bk.shifted_pair(2), "2q", "3q")
    assert bk.check_pair(lemma, -3, 5, 30).passed
    assert bk.check_pair(bk.apply_s2(bk.apply_s1(bk.shifted_pair(1))), -2, 4, 30)
    doubled = bk.scale_pair_base(bk.shifted_pair(2), 2)
    assert bk.check_pair(bk.change_base(doubled, "inf"), -3, 4, 30)
    with pytest.raises(bk.UnsupportedShift):
        bk.unit_pair(3)


def test_wp_pairs():
    p = bk.wp_shifted_pair(2, "3q^4")
    assert bk.check_wp_pair(p, -3, 3, 30)
    assert bk.wp_inversion_check(p, -3, 3, 30)
    with pytest.raises(bk.DegenerateParameter):
        bk.wp_unit_pair(1, 0)


def test_corpus_and_verify():
    ids = [row["id"] for row in bk.identities()]
    assert "KMRR" in ids and "QULTRA_CONN" in ids
    report = bk.verify("KMRR k=2 m=1 order=40")
    assert report["status"] == "pass"
    assert report["first_mismatch_texp"] is None
    assert bk.verify("K1MRR m=5")["status"] == "pass"
    lhs, rhs = bk.build_sides("K1MRR m=3")
    assert lhs == rhs
    assert lhs.items() == [(2, Fraction(-1))]
    lx, rx = bk.build_sides("QULTRA_CONN n=2 order=20")
    assert sorted(lx) == [-2, 0, 2]
    assert all(lx[x].truncated(20) == rx[x].truncated(20) for x in lx)
    with pytest.raises(bk.ConstraintViolation):
        bk.verify("KMRR k=0")
    with pytest.raises(bk.UnknownIdentity):
        bk.verify("NOPE")
    assert bk.canonical_instance("RR1 order=10") == "RR1 order=10"


def test_reports_and_cli():
    data = json.loads(bk.report_json(["RR1 order=20", "K1MGG_ODD m=3"]))
    assert [r["status"] for r in data] == ["pass", "pass"]
    code, out, err = bk.run_cli(["verify", "RR2", "--q-order", "15"])
    assert code == 0 and "pass" in out and err == ""
    code, _, err = bk.run_cli(["verify", "KMRR", "--param", "k=0"])
    assert code == 2 and "error" in err


def test_degenerations():
    assert all(ok for _, ok, _ in bk.degeneration_suite(30))
