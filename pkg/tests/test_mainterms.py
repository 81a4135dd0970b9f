"""Main-term predictions, weight closed forms, and the bound brackets.

The design rule throughout: every prediction that collapses to a
closed form on simple input is pinned to that closed form exactly
(1e-12 relative or better), and every dual-route identity is asserted
as an identity, not a tolerance comparison.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from zetares import (beta_cx, constants, mult_sum_check, predict_S1,
                     predict_S2, predict_S3, rvm_count, s1_weights,
                     theorem1_bound)

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# beta integrals

def test_beta_exact_small_cases():
    # i(u, v) = u! v! / (u + v + 1)!
    assert beta_cx(0, 0, math.e)[0] == 1.0
    assert beta_cx(1, 1, math.e)[0] == pytest.approx(1.0 / 6.0, rel=1e-15)
    assert beta_cx(2, 3, math.e)[0] == pytest.approx(1.0 / 60.0, rel=1e-15)
    # c_X(u, v) = (log X)^(u+v+1) i(u, v); here i(2,1) = 2!1!/4! = 1/12
    _, c = beta_cx(2, 1, math.exp(2.0))
    assert c == pytest.approx(2.0**4 / 12.0, rel=1e-14)


@settings(max_examples=30)
@given(st.integers(min_value=0, max_value=12),
       st.integers(min_value=0, max_value=12))
def test_beta_symmetric_and_positive(u, v):
    i_uv = beta_cx(u, v, 10.0)[0]
    assert i_uv == beta_cx(v, u, 10.0)[0]
    assert 0.0 < i_uv <= 1.0


@settings(max_examples=10)
@given(st.integers(min_value=0, max_value=8),
       st.integers(min_value=0, max_value=8))
def test_beta_matches_quadrature(u, v):
    # i(u, v) = integral_0^1 a^u (1 - a)^v da
    ref = quad(lambda a: a**u * (1.0 - a) ** v, 0.0, 1.0, epsabs=1e-14)[0]
    assert beta_cx(u, v, 5.0)[0] == pytest.approx(ref, rel=1e-11)


# ---------------------------------------------------------------------------
# Euler-product constants

def test_constants_frozen_r2():
    c = constants(2)
    assert c.C0 == pytest.approx(0.28674748673769723, rel=1e-14)
    assert c.C1 == pytest.approx(0.47168067755001625, rel=1e-14)
    assert c.C2 == pytest.approx(0.6079271430559942, rel=1e-14)
    assert c.truncation_error_estimate < 1e-6
    assert constants(2) is c          # memoized


def test_constants_factorization_identity():
    # C0 = C1 C2 holds per local factor, so exactly at any cutoff
    for r in (1, 2, 3, 4):
        c = constants(r, 10**4)
        assert c.C0 == pytest.approx(c.C1 * c.C2, rel=1e-12)
        assert c.C0_alt == pytest.approx(c.C0, rel=1e-12)
        assert c.C0 > 0.0


def test_constants_c2_known_limit():
    # at r = 2 the local C2 factor telescopes to the zeta(2) inverse
    c = constants(2, 10**6)
    assert c.C2 == pytest.approx(6.0 / math.pi**2,
                                 abs=5 * c.truncation_error_estimate)


def test_constants_r1_trivial():
    # r = 1: tau_1 = 1, every local series collapses
    c = constants(1, 10**5)
    assert c.C1 == pytest.approx(1.0, rel=1e-10)
    assert c.C0 == pytest.approx(c.C2, rel=1e-12)


def test_constants_validation():
    with pytest.raises(ValueError):
        constants(0)
    with pytest.raises(ValueError):
        constants(7)


# ---------------------------------------------------------------------------
# mean-value checks of the divisor sums

def test_mult_check_exact_base_case():
    # sum_{n <= x} tau_1(n) = floor(x): ratio is 1 up to the floor
    rep = mult_sum_check("i", 1, 1e5)
    assert rep.passed
    assert rep.ratio == pytest.approx(1.0, abs=1e-4)
    assert rep.label == "mult_i_r1_u1_x100000"


def test_mult_check_passing_cells():
    assert mult_sum_check("i", 2, 1e5).passed
    assert mult_sum_check("vi", 2, 1e5).passed
    assert mult_sum_check("v", 2, 1e5).passed


def test_mult_check_validation():
    with pytest.raises(ValueError):
        mult_sum_check("viii", 2, 1e5)
    with pytest.raises(ValueError):
        mult_sum_check("i", 0, 1e5)
    with pytest.raises(ValueError):
        mult_sum_check("i", 2, 10**9)   # above the sieve budget


@pytest.mark.xfail(reason="second-order terms still ~2x at desk-scale x; "
                   "kept as the documented infeasible cell", strict=True)
def test_mult_check_shifted_pair_cell():
    assert mult_sum_check("iv", 2, 1e6).passed


# ---------------------------------------------------------------------------
# quadratic-form weights

def test_weight_closed_forms():
    T = 1000.0
    lt = math.log(T / TWO_PI)
    # diagonal weight at n = 1, prime, prime power
    assert s1_weights(T, n=1) == pytest.approx(0.5 * lt * lt, rel=1e-15)
    l5 = math.log(5.0)
    assert s1_weights(T, n=5) == pytest.approx(
        0.5 * lt * lt - lt * l5 - 0.5 * l5 * l5, rel=1e-13)
    # composite picks up the convolution term (Lambda * log)(n)
    l2, l3 = math.log(2.0), math.log(3.0)
    conv6 = l2 * l3 + l3 * l2
    l6 = math.log(6.0)
    assert s1_weights(T, n=6) == pytest.approx(
        0.5 * lt * lt - lt * l6 - 0.5 * l6 * l6 + conv6, rel=1e-13)


def test_weight_g_values():
    T = 1000.0
    lt = math.log(T / TWO_PI)
    # g(d) = -(lt + log d) Lambda(d) + Lambda_2(d)/2
    l2 = math.log(2.0)
    assert s1_weights(T, n=2, kind="g") == pytest.approx(
        -(lt + l2) * l2 + 0.5 * l2 * l2, rel=1e-13)
    # g on squarefree composites: Lambda part dies, Lambda_2 survives
    assert s1_weights(T, n=6, kind="g") == pytest.approx(
        math.log(2.0) * math.log(3.0), rel=1e-13)
    assert s1_weights(T, n=1, kind="g") == 0.0


def test_weight_pair_values():
    # r1(a, b) = Lambda_2(a)/2 - log(T/b) Lambda(a); the T-scale here is
    # T itself, not T/2pi
    T = 1000.0
    l2 = math.log(2.0)
    expect = 0.5 * 3.0 * l2 * l2 - math.log(T / 3.0) * l2
    assert s1_weights(T, pair=(4, 3)) == pytest.approx(expect, rel=1e-13)
    # Lambda(a) = 0 kills the pair weight entirely
    assert s1_weights(T, pair=(6, 2)) == pytest.approx(
        0.5 * 2.0 * math.log(2.0) * math.log(3.0), rel=1e-13)
    assert s1_weights(T, pair=(1, 5)) == 0.0


# ---------------------------------------------------------------------------
# predictions

def test_predict_s1_indicator_closed_form():
    # x supported on {1}: only r0(1) survives, giving (T/4pi) log^2(T/2pi)
    for T in (500.0, 5000.0, 2.0e4):
        expect = T / (4.0 * math.pi) * math.log(T / TWO_PI) ** 2
        assert predict_S1({1: 1.0}, T, 1, 0.25) == pytest.approx(
            expect, rel=1e-14)


def test_predict_s1_theta_validation():
    with pytest.raises(ValueError):
        predict_S1({1: 1.0}, 1000.0, 1, 0.5)
    with pytest.raises(ValueError):
        predict_S1({1: 1.0}, 1000.0, 1, 0.0)


def test_predict_s2_small_closed_form():
    # x = 1 on {1,2,3}: N(T) sum 1/m - (T/pi) sum (Lambda*x)(m) x_m / m
    T = 5000.0
    expect = rvm_count(T) * (1.0 + 0.5 + 1.0 / 3.0) \
        - (T / math.pi) * (math.log(2.0) / 2.0 + math.log(3.0) / 3.0)
    assert predict_S2([1.0, 1.0, 1.0], T, 3) == pytest.approx(expect,
                                                              rel=1e-14)


def test_predict_s2_range_validation():
    with pytest.raises(ValueError):
        predict_S2([1.0], 0.5, 1)
    with pytest.raises(ValueError):
        predict_S2([1.0, 1.0], 1.5, 2)   # M > T


def test_predict_s3_enumerated():
    # ((T2-T1)/2pi) sum_{nu<=M} mu(n)/(n u) x_u x_{nu}
    t1, t2 = 100.0, 600.0
    x1, x2, x3 = 1.0, 0.5, 0.25
    pairs = (x1 * x1 + x2 * x2 / 2.0 + x3 * x3 / 3.0   # n = 1
             - 0.5 * x1 * x2                           # n = 2, u = 1
             - x1 * x3 / 3.0)                          # n = 3, u = 1
    expect = (t2 - t1) / TWO_PI * pairs
    assert predict_S3([x1, x2, x3], t1, t2, 3) == pytest.approx(
        expect, rel=1e-14)


@settings(max_examples=25)
@given(st.lists(st.floats(min_value=-2, max_value=2), min_size=1,
                max_size=30),
       st.floats(min_value=0.25, max_value=4.0))
def test_predictions_scale_quadratically(xs, c):
    if not any(xs):
        return
    M = len(xs)
    T = 9000.0
    scaled = [c * v for v in xs]
    base2 = predict_S2(xs, T, M)
    assert predict_S2(scaled, T, M) == pytest.approx(c * c * base2,
                                                     rel=1e-9, abs=1e-9)
    base3 = predict_S3(xs, 200.0, 900.0, M)
    assert predict_S3(scaled, 200.0, 900.0, M) == pytest.approx(
        c * c * base3, rel=1e-9, abs=1e-9)
    base1 = predict_S1(xs, T, M, 0.3)
    assert predict_S1(scaled, T, M, 0.3) == pytest.approx(
        c * c * base1, rel=1e-9, abs=1e-9)


@settings(max_examples=20)
@given(st.lists(st.floats(min_value=-2, max_value=2), min_size=1,
                max_size=20),
       st.floats(min_value=300.0, max_value=1500.0))
def test_predict_s3_additive_in_range(xs, tm):
    if not any(xs):
        return
    M = len(xs)
    whole = predict_S3(xs, 100.0, 2000.0, M)
    split = predict_S3(xs, 100.0, tm, M) + predict_S3(xs, tm, 2000.0, M)
    assert split == pytest.approx(whole, rel=1e-11, abs=1e-11)


# ---------------------------------------------------------------------------
# the lower-bound coefficient chain

def test_bracket_margins_frozen():
    # assembled minus claimed bracket, theta-free by construction
    margins = [theorem1_bound(r, 0.25, 50.0).bracket_margin
               for r in range(1, 7)]
    assert margins == pytest.approx([6.0, 35.0, 108.0, 252.0, 500.0, 891.0],
                                    rel=1e-12)


@given(st.integers(min_value=1, max_value=6),
       st.floats(min_value=0.02, max_value=0.48),
       st.floats(min_value=0.02, max_value=0.48))
def test_bracket_margin_theta_free_and_positive(r, th1, th2):
    b1 = theorem1_bound(r, th1, 50.0)
    b2 = theorem1_bound(r, th2, 50.0)
    assert b1.bracket_margin == pytest.approx(b2.bracket_margin, rel=1e-9)
    assert b1.bracket_margin > 0.0
    assert b1.claim_bracket > 0.0
    assert b1.S1_lower_coeff > 0.0


def test_t2_dual_route_identity():
    for r in (1, 2, 3):
        for theta in (0.1, 0.25, 0.4):
            b = theorem1_bound(r, theta, 37.0)
            assert b.t2_main_direct == pytest.approx(b.t2_main_via_beta,
                                                     rel=1e-12)


def test_headline_coefficients_r1():
    b = theorem1_bound(1, 0.25, 50.0)
    # claim = 4 (3 - 0.75) / 0.0625 = 144; over (r^2+r+2)! = 24
    assert b.S1_lower_coeff == pytest.approx(6.0, rel=1e-13)
    assert b.S2_upper_coeff == pytest.approx(4.0, rel=1e-13)
    assert b.ratio_exponent == 2
    assert tuple(b)[2] == 2


def test_bound_validation():
    with pytest.raises(ValueError):
        theorem1_bound(0, 0.25, 50.0)
    with pytest.raises(ValueError):
        theorem1_bound(2, 0.5, 50.0)
    with pytest.raises(ValueError):
        theorem1_bound(2, 0.25, 0.0)
