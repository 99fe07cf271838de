"""Smoke tests for the weylgrowth python module."""

from fractions import Fraction

import pytest

import weylgrowth as wg

H48_HEAD = [1, 6, 20, 52, 117, 237, 445, 791, 1347]


def test_validate_and_classify():
    a2 = wg.validate_gcm([[2, -1], [-1, 2]])
    assert a2.rank == 2
    assert a2.cartan_class == "Finite"
    assert not a2.hyperbolic
    h48 = wg.h48_cartan()
    assert h48.cartan_class == "Indefinite"
    assert h48.hyperbolic
    assert wg.determinant(h48) == -4
    assert wg.classify(h48) == ("Indefinite", True)


def test_bad_matrices_raise():
    with pytest.raises(ValueError):
        wg.validate_gcm([[2, -1], [0, 2]])
    with pytest.raises(ValueError):
        wg.validate_gcm([[2, 0], [0, 2]])


def test_reflect_and_words():
    h48 = wg.h48_cartan()
    assert wg.reflect(wg.rho(6), 0, h48) == [-1, 2, 1, 1, 1, 1]
    a2 = wg.finite_cartan("A2")
    assert wg.reduced_words(a2, 3) == [[0, 1, 0]]
    words = wg.reduced_words(h48, 2, filter=[0, 1, 2, 3])
    assert words == [[4, 2], [4, 5], [5, 2]]


def test_inverse_cartan_fractions():
    inv = wg.inverse_cartan(wg.finite_cartan("A2"))
    assert inv[0][0] == Fraction(2, 3)
    assert inv[0][1] == Fraction(1, 3)


def test_poincare_and_orders():
    assert wg.finite_poincare("A4") == [1, 4, 9, 15, 20, 22, 20, 15, 9, 4, 1]
    assert wg.weyl_order("B5") == 3840
    assert wg.degrees("G2") == [2, 6]
    assert wg.affine_poincare("D4", 3) == [1, 5, 14, 32]
    assert wg.finite_order(wg.finite_cartan("G2")) == 12


def test_growth_series():
    g = wg.growth_series(wg.h48_cartan(), 8)
    assert g.coeffs == H48_HEAD
    assert not g.complete
    full = wg.growth_series(wg.finite_cartan("A4"), 20)
    assert full.complete
    assert sum(full.coeffs) == 120


def test_parabolic_and_factorization():
    h48 = wg.h48_cartan()
    cosets = wg.parabolic_coset_growth(h48, [0, 1, 2, 3], 6)
    assert cosets.coeffs == [1, 2, 3, 7, 12, 19, 32]
    rep = wg.verify_factorization(h48, [0, 1, 2, 3], 8)
    assert rep.ok
    assert rep.parabolic_poincare == wg.finite_poincare("A4")


def test_series_arithmetic_is_exact_at_any_size():
    big = 10**40
    prod = wg.series_mul([1, big], [1, -big])
    assert prod == [1, 0, -(big * big)]
    assert wg.series_div(prod, [1, big]) == [1, -big, big * big]


def test_fit_against_the_paper_series():
    pc = wg.paper_constants()
    fit = wg.fit_denominator(pc["h48_series"], "B5")
    assert fit is not None
    assert fit.observed_degree == 24
    assert fit.positive_roots == 25
    assert fit.q == wg.load_catalog()[47].q
    ok, mismatch = wg.rational_check(
        pc["r1_numerator"],
        pc["r12_denominator"],
        wg.compute_R(pc["h48_series"], pc["p_a4"] + [0] * 15),
    )
    assert ok and mismatch is None


def test_catalog():
    entries = wg.load_catalog()
    assert len(entries) == 48
    assert entries[12].alias_of == 11
    assert entries[12].q == entries[10].q
    report = wg.verify_entry(entries[6])
    assert report.status == "MatrixUnavailable"


def test_display():
    assert wg.display([1, -1, 0, -2]) == "1 - t - 2 t^3"
