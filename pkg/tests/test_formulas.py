"""Tests for the explicit trinomial-coefficient formulas."""

from fractions import Fraction

import pytest

from skewdyck import genfunc
from skewdyck.formulas import (
    binom,
    dual_coeff_explicit,
    kappa_coeff,
    lambda_coeff,
    mu_coeff,
    primal_coeff_explicit,
    red_coeff_explicit,
    trinomial,
)
from skewdyck.series import RATIONAL, Series, WPoly, div


def test_binom_conventions():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(-1, 3) == -1  # (-1)^3 * C(3,3)
    assert binom(-2, 2) == 3  # C(3,2)
    assert binom(4, -1) == 0


class TestTrinomial:
    def test_examples(self):
        assert trinomial(2, 3, 2) == 11
        assert trinomial(5, 7, 0) == 1
        w = WPoly((0, 1))
        assert trinomial(3, 2 + w, 1) == 3 * (2 + w)

    def test_out_of_range(self):
        assert trinomial(2, 3, 5) == 0
        assert trinomial(2, 3, -1) == 0
        with pytest.raises(ValueError):
            trinomial(-1, 3, 0)

    def test_symmetry(self):
        for n in (3, 7, 12, 40):
            for k in range(2 * n + 1):
                assert trinomial(n, 3, k) == trinomial(n, 3, 2 * n - k)

    def test_row_sums(self):
        # evaluating at t=1 gives (1+m+1)^n
        for n in range(6):
            assert sum(trinomial(n, 3, k) for k in range(2 * n + 1)) == 5**n


def _rational_poly(coeffs, order):
    return Series.from_dict(dict(enumerate(coeffs)), order, RATIONAL)


@pytest.mark.parametrize("j", range(9))
def test_lambda_matches_series_oracle(j):
    order = 22
    num = _rational_poly((1, 3, 1, -3, -2), order)  # (1+v)^2 (1+2v)(1-v)
    den = Series.one(order, RATIONAL)
    base = _rational_poly((2, 1), order)
    for _ in range(j + 1):
        den = den * base
    oracle = div(num, den)
    for k in range(21):
        assert lambda_coeff(j, k) == oracle.coeff(k), (j, k)


def test_lambda_edge_cases():
    assert lambda_coeff(0, 0) == Fraction(1, 2)
    assert lambda_coeff(3, -1) == 0


@pytest.mark.parametrize("j", range(9))
def test_kappa_matches_series_oracle(j):
    order = 22
    num = _rational_poly((1, 1, -1, -1), order)  # (1+v)^2 (1-v)
    den = Series.one(order, RATIONAL)
    base = _rational_poly((1, 2), order)
    for _ in range(j):
        den = den * base
    oracle = div(num, den)
    for k in range(21):
        assert kappa_coeff(j, k) == oracle.coeff(k), (j, k)


@pytest.mark.parametrize("j", range(9))
def test_mu_matches_series_oracle(j):
    order = 22
    base = _rational_poly((2, 1), order)
    one = Series.one(order, RATIONAL)
    poly = 3 * one - 7 * base + 5 * base * base - base * base * base
    for _ in range(j):
        poly = poly * base
    for k in range(21):
        assert mu_coeff(j, k) == poly.coeff(k), (j, k)


def test_mu_vanishes_beyond_degree():
    assert mu_coeff(0, 4) == 0
    assert mu_coeff(2, 6) == 0


def test_primal_explicit_examples():
    assert primal_coeff_explicit(0, 3) == 10
    assert primal_coeff_explicit(1, 3) == 21
    assert primal_coeff_explicit(2, 4) == 145
    with pytest.raises(ValueError):
        primal_coeff_explicit(0, 0)


def test_dual_explicit_examples():
    assert dual_coeff_explicit(2, 2) == 29
    assert dual_coeff_explicit(0, 3) == 10
    assert dual_coeff_explicit(3, 4) == 1306
    with pytest.raises(ValueError):
        dual_coeff_explicit(0, 0)


def test_red_explicit_examples():
    assert red_coeff_explicit(1) == WPoly.const(1)
    assert red_coeff_explicit(3) == WPoly((5, 4, 1))
    assert red_coeff_explicit(4) == WPoly((14, 15, 6, 1))
    with pytest.raises(ValueError):
        red_coeff_explicit(0)


def test_primal_explicit_matches_closed_forms():
    order = 24
    for j in range(5):
        s = genfunc.primal_level_series(j, order=order)
        m = 1
        while 2 * m + j <= order:
            assert primal_coeff_explicit(j, m) == s.coeff(2 * m + j), (j, m)
            m += 1


def test_dual_explicit_matches_closed_forms():
    order = 24
    for j in range(5):
        s = genfunc.dual_level_series(j, order=order)
        N = 1
        while j + 2 * N <= order:
            assert dual_coeff_explicit(j, N) == s.coeff(j + 2 * N), (j, N)
            N += 1


def test_red_explicit_matches_closed_forms():
    sx = genfunc.even_to_x(genfunc.red_level_series(0, order=30))
    for n in range(1, 15):
        assert red_coeff_explicit(n) == sx.coeff(n), n
