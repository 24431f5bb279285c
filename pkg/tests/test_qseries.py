"""Exact truncated expansions in u = exp(2*pi*i*tau/72).

These series are the independent witness for the substitution matrices:
identities checked here hold coefficient by coefficient in the
cyclotomic field, with no numerics involved.
"""

import mpmath
import pytest

from classinv.cyclotomic import GALOIS_EXPONENTS, CycNum
from classinv.etarep import rep_sigma, rep_t
from classinv.numeval import eta, r_value
from classinv.qseries import (
    QSeries,
    eta_series,
    eta_shift_series,
    eta_triple_series,
    euler_product,
    r_series,
)

BOUND = 150


def _combination(matrix_row, bound):
    """Linear combination of the six quotient series with CycNum weights."""
    total = None
    for j, weight in enumerate(matrix_row):
        if not weight:
            continue
        term = r_series(j, bound).scale(weight)
        total = term if total is None else total + term
    return total


def test_euler_product_pentagonal_numbers():
    series = euler_product(1, 0, 60)
    one = CycNum.one()
    # prod(1 - u^n) = 1 - u - u^2 + u^5 + u^7 - u^12 - u^15 + u^22 + u^26 ...
    expected = {0: one, 1: -one, 2: -one, 5: one, 7: one, 12: -one,
                15: -one, 22: one, 26: one, 35: -one, 40: -one, 51: one,
                57: one}
    for e in range(60):
        assert series.coefficient(e) == expected.get(e, CycNum.zero())


def test_eta_series_leading_terms():
    series = eta_series(400)
    one = CycNum.one()
    # q^(1/24) = u^3 times the pentagonal series in q = u^72
    expected = {3: one, 75: -one, 147: -one, 363: one}
    for e in range(400):
        assert series.coefficient(e) == expected.get(e, CycNum.zero())


def test_eta_shift_series_leading_terms():
    zeta = CycNum.zeta_pow
    for j in range(3):
        series = eta_shift_series(j, 60)
        # eta(tau/3 + j/3) = z^j u (1 - z^(24j) u^24 - z^(48j) u^48 + ...)
        assert series.coefficient(1) == zeta(j)
        assert series.coefficient(25) == -zeta(j) * zeta(24 * j)
        assert series.coefficient(49) == -zeta(j) * zeta(48 * j)
    assert eta_triple_series(60).coefficient(9) == CycNum.one()


def test_quotient_series_leading_terms():
    zeta = CycNum.zeta_pow
    # leading exponents 9+1-6 = 4 for indices 0..2 and 1+1-6 = -4 for 3..5
    leading = {
        0: (4, zeta(0)),
        1: (4, zeta(1)),
        2: (4, zeta(2)),
        3: (-4, zeta(2)),
        4: (-4, zeta(1)),
        5: (-4, zeta(3)),
    }
    for index, (exponent, coeff) in leading.items():
        series = r_series(index, BOUND).normalized()
        assert series.val == exponent
        assert series.coefficient(exponent) == coeff


def test_translation_matches_matrix():
    # F_i(tau + 1) = sum_j T[i][j] F_j(tau), checked to u^BOUND
    matrix = rep_t()
    for i in range(6):
        shifted = r_series(i, BOUND).twist(1)
        assert shifted.agrees_with(_combination(matrix.rows[i], BOUND))


def test_galois_twist_matches_matrix():
    # coefficientwise z -> z^d equals the sigma_d matrix action
    for d in GALOIS_EXPONENTS:
        matrix = rep_sigma(d)
        for i in range(6):
            twisted = r_series(i, BOUND).galois(d)
            assert twisted.agrees_with(_combination(matrix.rows[i], BOUND))


def test_series_arithmetic_and_normalization():
    one = CycNum.one()
    series = QSeries(0, (CycNum.zero(), one, one), 3)
    assert series.normalized().val == 1
    doubled = series + series
    assert doubled.coefficient(1) == one + one
    negated = -series
    assert negated.coefficient(2) == -one
    with pytest.raises(ValueError, match="coefficient count"):
        QSeries(0, (one,), 3)
    with pytest.raises(ValueError, match="beyond truncation bound"):
        series.coefficient(7)
    with pytest.raises(ZeroDivisionError):
        QSeries(0, (CycNum.zero(),), 1).inverse()


def test_series_match_direct_eta_evaluation():
    # the truncation error at Im tau >= 20 is far below 1e-100
    with mpmath.workdps(130):
        for tau in (mpmath.mpc("0.3", "20"), mpmath.mpc("-0.2", "22")):
            series_eta = eta_series(BOUND).eval_numeric(tau, 120)
            assert abs(series_eta - eta(tau, 120)) < mpmath.mpf("1e-100")
            for index in (0, 2, 5):
                series_val = r_series(index, BOUND).eval_numeric(tau, 120)
                direct = r_value(index, tau, 120)
                assert abs(series_val - direct) < mpmath.mpf("1e-100")


def test_r_series_index_validated():
    with pytest.raises(ValueError, match="index out of range"):
        r_series(6, 50)
