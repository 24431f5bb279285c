"""Arbitrary-precision evaluation of eta, the six quotients, t_n and j.

The eta oracle is a direct truncated product computed here with plain
mpmath, independent of the library's pentagonal-number series.
"""

import random

import mpmath
import pytest

from classinv.numeval import eta, j_invariant, r_value, r_vector, ramanujan_value
from classinv.classpoly import IntPolynomial
from classinv.quadforms import form_root, reduced_forms

from golden_data import HILBERT_107, SMALL_TABLE, T35_PREFIX, T107_PREFIX


def _eta_product_oracle(tau, dps, factors=400):
    """q^(1/24) * prod_{n<=factors} (1 - q^n), directly."""
    with mpmath.workdps(dps + 15):
        q = mpmath.expjpi(2 * tau)
        acc = mpmath.expjpi(tau / 12)
        for n in range(1, factors + 1):
            acc *= 1 - q ** n
        return acc


def test_eta_at_i():
    # eta(i) = Gamma(1/4) / (2 pi^(3/4))
    with mpmath.workdps(130):
        expected = mpmath.gamma(mpmath.mpf(1) / 4) / (
            2 * mpmath.pi ** mpmath.mpf("0.75")
        )
        assert abs(eta(mpmath.mpc(0, 1), 120) - expected) < mpmath.mpf("1e-115")


def test_eta_matches_direct_product():
    with mpmath.workdps(130):
        tol = mpmath.mpf("1e-110")
        for tau in (
            mpmath.mpc(0, 1),
            mpmath.mpc("0.3", "0.9"),
            mpmath.mpc("-0.45", "1.7"),
        ):
            assert abs(eta(tau, 120) - _eta_product_oracle(tau, 120)) < tol


def test_eta_functional_equations():
    rng = random.Random(117)
    with mpmath.workdps(130):
        tol = mpmath.mpf("1e-100")
        factor = mpmath.expjpi(mpmath.mpf(1) / 12)
        for _ in range(20):
            tau = mpmath.mpc(rng.uniform(-0.45, 0.45), rng.uniform(0.6, 2.2))
            left = eta(tau + 1, 120)
            assert abs(left - factor * eta(tau, 120)) < tol
            left = eta(-1 / tau, 120)
            root = mpmath.sqrt(-mpmath.mpc(0, 1) * tau)
            assert abs(left - root * eta(tau, 120)) < tol


def test_eta_rejects_lower_half_plane():
    for tau in (mpmath.mpc(0, -1), mpmath.mpc(2, 0), 0.5):
        with pytest.raises(ValueError, match="not in upper half-plane"):
            eta(tau)


def test_quotients_are_finite_nonzero_and_periodic():
    with mpmath.workdps(130):
        tau = mpmath.mpc(0, 2)
        values = r_vector(tau, 120)
        assert len(values) == 6
        for v in values:
            assert mpmath.isfinite(v)
            assert abs(v) > 0
        tol = mpmath.mpf("1e-100")
        for index in range(6):
            assert abs(r_value(index, tau + 72, 120) - values[index]) < tol
    with pytest.raises(ValueError, match="index out of range"):
        r_value(6, mpmath.mpc(0, 2))


def test_invariant_anchors():
    with mpmath.workdps(130):
        assert abs(ramanujan_value(11, 120) - 1) < mpmath.mpf("1e-110")
        golden_ratio_conjugate = (mpmath.sqrt(5) - 1) / 2
        assert abs(ramanujan_value(35, 120) - golden_ratio_conjugate) < mpmath.mpf("1e-110")
        assert mpmath.nstr(ramanujan_value(35, 120), 50).startswith(T35_PREFIX[:40])


def test_invariant_107_is_root_of_its_polynomial():
    with mpmath.workdps(130):
        value = ramanujan_value(107, 120)
        assert mpmath.nstr(value, 12).startswith(T107_PREFIX)
        poly = IntPolynomial.from_descending(SMALL_TABLE[107])
        assert abs(poly.evaluate(value)) < mpmath.mpf("1e-105")
        # cross-check against mpmath's own root finder
        roots = mpmath.polyroots([mpmath.mpf(c) for c in SMALL_TABLE[107]])
        real_roots = [r for r in roots if abs(mpmath.im(r)) < 1e-10]
        assert len(real_roots) == 1
        assert abs(value - mpmath.re(real_roots[0])) < mpmath.mpf("1e-100")


def test_invariants_are_real_and_in_unit_interval():
    with mpmath.workdps(130):
        tol = mpmath.mpf("1e-100")
        for n in (11, 59, 107, 131, 203):
            tau = (-1 + mpmath.sqrt(mpmath.mpf(n)) * 1j) / 2
            complex_value = mpmath.sqrt(3) * r_value(2, tau, 120)
            assert abs(mpmath.im(complex_value)) < tol
            value = ramanujan_value(n, 120)
            assert 0 < value <= 1 + tol


def test_invariant_rejects_bad_input():
    with pytest.raises(ValueError, match="n must be positive"):
        ramanujan_value(-11)


def test_j_invariant_anchors():
    with mpmath.workdps(130):
        tol = mpmath.mpf("1e-95")
        assert abs(j_invariant(mpmath.mpc(0, 1), 120) - 1728) < tol
        corner = (-1 + mpmath.sqrt(3) * 1j) / 2
        assert abs(j_invariant(corner, 120)) < tol
        # j((1 + i sqrt(163))/2) is famously within 1e-12 of an integer
        almost = j_invariant((-1 + mpmath.sqrt(163) * 1j) / 2, 120)
        assert abs(almost - (-640320**3)) < mpmath.mpf("1e-80")


def test_j_trace_matches_hilbert_coefficient():
    # sum of j over the three class representatives of disc -107
    with mpmath.workdps(140):
        total = mpmath.mpc(0)
        for form in reduced_forms(-107):
            total += j_invariant(form_root(form, 130), 130)
        assert abs(total - (-HILBERT_107[1])) < mpmath.mpf("1e-70")


def test_default_precision_comes_from_context():
    with mpmath.workdps(40):
        value = ramanujan_value(35, None)
        golden_ratio_conjugate = (mpmath.sqrt(5) - 1) / 2
        assert abs(value - golden_ratio_conjugate) < mpmath.mpf("1e-38")
