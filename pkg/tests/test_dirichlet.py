"""Dirichlet polynomial evaluation and critical-line mean values."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetares import DirichletPolynomial, dirichlet_poly_eval, mean_value_check

COEFF = st.lists(st.floats(min_value=-3, max_value=3), min_size=1,
                 max_size=12)


def test_from_values_dict_and_sequence_agree():
    a = DirichletPolynomial.from_values([1.0, 0.0, 2.5])
    b = DirichletPolynomial.from_values({1: 1.0, 3: 2.5})
    assert a.M == b.M == 3
    assert np.array_equal(a.coeffs, b.coeffs)
    assert a.sum_squares() == pytest.approx(1.0 + 2.5**2)


def test_bad_inputs_rejected():
    with pytest.raises(ValueError):
        DirichletPolynomial.from_values({0: 1.0})
    with pytest.raises(ValueError):
        DirichletPolynomial.from_values([])


def test_eval_hand_case():
    # A(s) = 1 + 2/2^s at s = 1: expect 2
    A = DirichletPolynomial.from_values([1.0, 2.0])
    assert A.eval(1.0) == pytest.approx(2.0, rel=1e-15)
    # at s = 0: 1 + 2 = 3
    assert A.eval(0.0) == pytest.approx(3.0, rel=1e-15)


@settings(max_examples=30)
@given(COEFF, st.floats(min_value=-200, max_value=200))
def test_eval_critical_matches_pointwise(xs, gamma):
    A = DirichletPolynomial.from_values(xs)
    via_grid = A.eval_critical(np.array([gamma]))[0]
    direct = dirichlet_poly_eval(A, complex(0.5, gamma))
    assert abs(via_grid - direct) <= 1e-11 * max(1.0, abs(direct))


@given(COEFF, st.floats(min_value=0.0, max_value=500.0))
def test_conjugate_symmetry_on_critical_line(xs, gamma):
    # real coefficients: A(1/2 - it) = conj A(1/2 + it)
    A = DirichletPolynomial.from_values(xs)
    up = dirichlet_poly_eval(A, complex(0.5, gamma))
    down = dirichlet_poly_eval(A, complex(0.5, -gamma))
    assert abs(down - up.conjugate()) <= 1e-12 * max(1.0, abs(up))


def test_eval_critical_chunking_consistent():
    A = DirichletPolynomial.from_values(np.arange(1, 40, dtype=float))
    g = np.linspace(10.0, 800.0, 173)
    assert np.allclose(A.eval_critical(g, chunk=7), A.eval_critical(g),
                       rtol=1e-12, atol=1e-12)


def test_mean_value_simple_polynomial():
    # on the imaginary axis |n^{-it}| = 1, so the second moment of
    # A(it) over [0, T] sits at T sum x_n^2 up to O(sum n x_n^2)
    A = DirichletPolynomial.from_values([1.0, 1.0])
    rep = mean_value_check(A, 0.0, 10_000.0)
    assert rep.passed
    assert rep.predicted == pytest.approx(10_000.0 * 2.0, rel=1e-12)
    assert rep.ratio == pytest.approx(1.0, abs=0.02)


def test_mean_value_scales_quadratically():
    A = DirichletPolynomial.from_values([1.0, 0.5, 0.0, 0.25])
    B = DirichletPolynomial.from_values([3.0, 1.5, 0.0, 0.75])
    ra = mean_value_check(A, 100.0, 4000.0)
    rb = mean_value_check(B, 100.0, 4000.0)
    assert rb.numeric == pytest.approx(9.0 * ra.numeric, rel=1e-9)
    assert rb.predicted == pytest.approx(9.0 * ra.predicted, rel=1e-12)


def test_mean_value_interval_additivity():
    A = DirichletPolynomial.from_values([1.0, -0.7, 0.3])
    whole = mean_value_check(A, 50.0, 2050.0)
    left = mean_value_check(A, 50.0, 1050.0)
    right = mean_value_check(A, 1050.0, 2050.0)
    assert left.numeric + right.numeric == pytest.approx(whole.numeric,
                                                         rel=1e-9)
