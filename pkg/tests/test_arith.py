"""Integer arithmetic layer against independent oracles.

sympy supplies the reference implementations for the classical
functions; the shifted-divisor local series and Lambda_k are checked
against their defining recursions and hand-computed closed forms.
"""

import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from zetares import (ArithFunctionTable, build_prime_table,
                     dirichlet_convolve, f_shift, f_shift_table, factorize,
                     lambda_k, lambda_k_table, log_power_table, mobius,
                     mobius_table, primes_up_to, sum_over_primes, tau_k,
                     tau_k_table, vonmangoldt_table)
from zetares.arith import iter_primes_in_range, omega

TAB = build_prime_table(5000)


# ---------------------------------------------------------------------------
# prime table and factorization

def test_prime_count_oracle():
    # pi(10^6) = 78498
    assert len(primes_up_to(10**6)) == 78498
    assert len(primes_up_to(100)) == 25


def test_spf_is_smallest_prime_factor():
    for n in (2, 4, 9, 12, 97, 98, 99, 4999, 5000):
        f = factorize(n, TAB)
        assert f.n == n
        assert math.prod(p**e for p, e in f.factors) == n
        assert f.factors[0][0] == min(p for p, _ in f.factors)


@given(st.integers(min_value=2, max_value=5000))
def test_factorize_matches_sympy(n):
    ours = dict(factorize(n, TAB).factors)
    assert ours == sympy.factorint(n)


def test_is_prime_and_primes_listing():
    ps = TAB.primes()
    assert ps[0] == 2 and ps[-1] == 4999
    assert all(TAB.is_prime(int(p)) for p in ps[:50])
    assert not TAB.is_prime(1)


def test_segmented_sieve_matches_dense():
    dense = primes_up_to(3000)
    seg = np.concatenate(list(iter_primes_in_range(0, 3000, block=97)))
    assert np.array_equal(dense, seg)
    # window interior: endpoints inclusive
    blk = np.concatenate(list(iter_primes_in_range(83, 113)))
    assert blk.tolist() == [83, 89, 97, 101, 103, 107, 109, 113]


def test_sum_over_primes_matches_direct():
    direct = sum(1.0 / p for p in primes_up_to(10**4))
    assert sum_over_primes(2, 10**4, lambda p: 1.0 / p) == pytest.approx(
        direct, rel=1e-14)


# ---------------------------------------------------------------------------
# classical multiplicative functions

@given(st.integers(min_value=1, max_value=5000))
def test_mobius_matches_sympy(n):
    assert mobius(n, TAB) == sympy.mobius(n)


@given(st.integers(min_value=1, max_value=5000))
def test_omega_matches_sympy(n):
    assert omega(n, TAB) == len(sympy.factorint(n))


@given(st.integers(min_value=1, max_value=5000),
       st.integers(min_value=1, max_value=5))
def test_tau_k_recursion(n, k):
    # tau_{k+1} = tau_k * 1
    lhs = tau_k(n, k + 1, TAB)
    rhs = sum(tau_k(d, k, TAB) for d in range(1, n + 1) if n % d == 0)
    assert lhs == rhs


def test_tau_2_is_divisor_count():
    for n in range(1, 200):
        assert tau_k(n, 2, TAB) == sympy.divisor_count(n)


def test_tau_k_prime_power_binomial():
    # tau_r(p^j) counts monomials: C(j + r - 1, r - 1)
    for r in range(1, 7):
        for j in range(0, 9):
            assert tau_k(2**j, r, TAB) == math.comb(j + r - 1, r - 1)


def test_tau_partial_sums_telescope():
    # sum_{j <= m} tau_r(p^j) = tau_{r+1}(p^m)
    for r in (1, 2, 3, 4):
        for m in range(0, 8):
            total = sum(tau_k(3**j, r, TAB) for j in range(m + 1))
            assert total == tau_k(3**m, r + 1, TAB)


# ---------------------------------------------------------------------------
# von Mangoldt tower

def test_vonmangoldt_values():
    lam = vonmangoldt_table(TAB)
    assert lam[1] == 0.0
    assert lam[12] == 0.0
    assert lam[8] == pytest.approx(math.log(2), rel=1e-15)
    assert lam[97] == pytest.approx(math.log(97), rel=1e-15)


def test_lambda_2_closed_forms():
    # (2j - 1) log^2 p on prime powers, 2 log p log q on {p^i q^j}
    assert lambda_k(8, 2, TAB) == pytest.approx(5 * math.log(2) ** 2)
    assert lambda_k(9, 2, TAB) == pytest.approx(3 * math.log(3) ** 2)
    assert lambda_k(6, 2, TAB) == pytest.approx(2 * math.log(2) * math.log(3))
    assert lambda_k(12, 2, TAB) == pytest.approx(2 * math.log(2) * math.log(3))
    assert lambda_k(30, 2, TAB) == 0.0          # three distinct primes
    assert lambda_k(1, 2, TAB) == 0.0


@settings(max_examples=30)
@given(st.integers(min_value=1, max_value=1500), st.integers(min_value=1, max_value=3))
def test_lambda_k_equals_mobius_log_k(n, k):
    # Lambda_k = mu * log^k, the defining convolution
    direct = sum(mobius(d, TAB) * math.log(n / d) ** k
                 for d in range(1, n + 1) if n % d == 0)
    assert lambda_k(n, k, TAB) == pytest.approx(direct, abs=1e-9)


def test_lambda_k_table_matches_pointwise():
    t3 = lambda_k_table(3, TAB)
    for n in (1, 2, 8, 30, 60, 210, 1024, 4999):
        assert t3[n] == pytest.approx(lambda_k(n, 3, TAB), abs=1e-10)


def test_lambda_k_support_bound():
    # Lambda_k vanishes when omega(n) > k
    t2 = lambda_k_table(2, TAB)
    for n in (30, 42, 66, 70, 2310):
        assert t2[n] == 0.0


# ---------------------------------------------------------------------------
# Dirichlet convolution

def _table(vals):
    return ArithFunctionTable("t", np.asarray([0.0] + vals, dtype=np.float64))


def test_convolution_small_case():
    a = _table([1.0, 2.0, 3.0, 4.0])
    b = _table([1.0, 1.0, 1.0, 1.0])
    c = dirichlet_convolve(a, b, 4)
    # (a*b)(4) = a(1)b(4) + a(2)b(2) + a(4)b(1)
    assert c[4] == 1.0 + 2.0 + 4.0
    assert c[1] == 1.0


@settings(max_examples=25)
@given(st.lists(st.floats(min_value=-4, max_value=4), min_size=6, max_size=24),
       st.lists(st.floats(min_value=-4, max_value=4), min_size=6, max_size=24))
def test_convolution_commutes(xs, ys):
    n = min(len(xs), len(ys))
    a, b = _table(xs[:n]), _table(ys[:n])
    ab = dirichlet_convolve(a, b, n)
    ba = dirichlet_convolve(b, a, n)
    assert np.allclose(ab.values, ba.values, atol=1e-12)


@settings(max_examples=15)
@given(st.lists(st.floats(min_value=-2, max_value=2), min_size=8, max_size=16),
       st.lists(st.floats(min_value=-2, max_value=2), min_size=8, max_size=16),
       st.lists(st.floats(min_value=-2, max_value=2), min_size=8, max_size=16))
def test_convolution_associates(xs, ys, zs):
    n = min(len(xs), len(ys), len(zs))
    a, b, c = _table(xs[:n]), _table(ys[:n]), _table(zs[:n])
    lhs = dirichlet_convolve(dirichlet_convolve(a, b, n), c, n)
    rhs = dirichlet_convolve(a, dirichlet_convolve(b, c, n), n)
    assert np.allclose(lhs.values, rhs.values, atol=1e-11)


def test_mobius_inverts_one():
    # mu * 1 = e (indicator of n = 1)
    one = _table([1.0] * 300)
    mu = mobius_table(build_prime_table(300))
    e = dirichlet_convolve(mu, one, 300)
    assert e[1] == 1.0
    assert np.all(e.values[2:] == 0.0)


def test_mangoldt_from_mobius_log():
    # Lambda = mu * log
    N = 400
    tab = build_prime_table(N)
    conv = dirichlet_convolve(mobius_table(tab), log_power_table(1, N), N)
    lam = vonmangoldt_table(tab)
    assert np.allclose(conv.values, lam.values, atol=1e-10)


def test_lambda_log_conv_identity():
    # Lambda_2(n) = Lambda(n) log n + (Lambda * Lambda)(n)
    N = 600
    tab = build_prime_table(N)
    lam = vonmangoldt_table(tab)
    lhs = lam.values * log_power_table(1, N).values + \
        dirichlet_convolve(lam, lam, N).values
    t2 = lambda_k_table(2, tab)
    assert np.allclose(lhs, t2.values, atol=1e-9)


# ---------------------------------------------------------------------------
# shifted local series

def test_f_shift_hand_values():
    # r = 2 closed forms at p = 2: f1 = sum tau_2(2^j) 2^-j = 3/2... times
    # normalization; frozen from the defining series
    assert f_shift(2, 2, 1, TAB) == pytest.approx(1.5, rel=1e-12)
    assert f_shift(2, 2, 2, TAB) == pytest.approx(4.0 / 3.0, rel=1e-12)
    assert f_shift(1, 2, 1, TAB) == 1.0
    assert f_shift(1, 2, 2, TAB) == 1.0


def test_f_shift_series_oracle():
    # f1(p^e) = sum_{j>=0} tau_r(p^{e+j}) p^-j / sum_{j>=0} tau_r(p^j) p^-j,
    # summed here directly from the binomial values of tau_r on powers
    r, p, e = 3, 5, 2
    num = sum(math.comb(e + j + r - 1, r - 1) * p ** float(-j)
              for j in range(60))
    den = sum(math.comb(j + r - 1, r - 1) * p ** float(-j) for j in range(60))
    assert f_shift(p**e, r, 1, TAB) == pytest.approx(num / den, rel=1e-12)


@settings(max_examples=40)
@given(st.sampled_from([(2, 3), (2, 5), (3, 5), (2, 7), (3, 7), (5, 7)]),
       st.integers(min_value=1, max_value=3),
       st.integers(min_value=1, max_value=3),
       st.integers(min_value=1, max_value=4),
       st.sampled_from([1, 2]))
def test_f_shift_multiplicative(pq, i, j, r, which):
    p, q = pq
    n = p**i * q**j
    if n > TAB.limit:
        return
    prod = f_shift(p**i, r, which, TAB) * f_shift(q**j, r, which, TAB)
    assert f_shift(n, r, which, TAB) == pytest.approx(prod, rel=1e-12)


def test_f_shift_table_matches_pointwise():
    t = f_shift_table(2, 1, build_prime_table(500))
    for n in (1, 2, 6, 12, 128, 360, 499):
        assert t[n] == pytest.approx(f_shift(n, 2, 1, TAB), rel=1e-12)


def test_tables_are_write_protected():
    t = tau_k_table(2, build_prime_table(50))
    with pytest.raises(ValueError):
        t.values[3] = 99.0
