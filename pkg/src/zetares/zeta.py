"""Critical-line evaluators: zeta, zeta', theta, and the Hardy Z function.

Two independent evaluation routes are kept deliberately separate:

* Euler-Maclaurin continuation (`zeta_eval`, `zeta_prime_eval`) works
  anywhere right of sigma > -2 and carries a computable truncation
  bound.  It is the accuracy reference.
* The Riemann-Siegel main sum with seven correction terms (`hardy_Z`
  for t >= 50) is the speed path used for zero scanning.  Its
  correction polynomials live in `_rs_tables` (see
  scripts/gen_rs_correction_tables.py for regeneration).

The two routes agree to ~5e-9 for t in [50, 120] and to better than
1e-11 beyond t ~ 1000, which the test suite pins down.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, cos, floor, pi, sqrt

import numpy as np
from numpy.polynomial.chebyshev import chebval
from scipy.special import loggamma

from ._rs_tables import CHEB, NUM_TERMS

__all__ = [
    "zeta_eval",
    "zeta_prime_eval",
    "theta",
    "hardy_Z",
    "hardy_Z_many",
    "RS_CUTOFF",
]

RS_CUTOFF = 50.0        # Riemann-Siegel above, Euler-Maclaurin below
MAX_IM = 1.0e6
MIN_PREC = 1.0e-12      # public precision floor

TWO_PI = 2.0 * pi
_TWO_PI_128 = np.float128("6.2831853071795864769252867665590057684")
_PI_128 = np.float128("3.1415926535897932384626433832795028842")


def _bern_over_fact(kmax: int) -> np.ndarray:
    """B_{2k}/(2k)! for k = 1..kmax, exact rationals rounded once."""
    nmax = 2 * kmax
    b = [Fraction(0)] * (nmax + 1)
    b[0] = Fraction(1)
    for m in range(1, nmax + 1):
        acc = Fraction(0)
        c = 1
        for k in range(m):
            acc += c * b[k]
            c = c * (m + 1 - k) // (k + 1)
        b[m] = -acc / (m + 1)
    fact = Fraction(1)
    out = np.empty(kmax + 1)
    out[0] = 1.0
    for n in range(1, nmax + 1):
        fact *= n
        if n % 2 == 0:
            out[n // 2] = float(b[n] / fact)
    return out


_B2K = _bern_over_fact(50)

# cached log arrays for the Euler-Maclaurin main sum
_LOG_CACHE: dict[str, np.ndarray] = {"f64": np.zeros(1), "f128": np.zeros(1, dtype=np.float128)}


def _logs(N: int) -> tuple[np.ndarray, np.ndarray]:
    if len(_LOG_CACHE["f64"]) < N + 1:
        size = max(N + 1, 2 * len(_LOG_CACHE["f64"]), 4096)
        n64 = np.arange(size, dtype=np.float64)
        n64[0] = 1.0
        _LOG_CACHE["f64"] = np.log(n64)
        _LOG_CACHE["f128"] = np.log(np.arange(size, dtype=np.float128) + (np.arange(size) == 0))
    return _LOG_CACHE["f64"][: N + 1], _LOG_CACHE["f128"][: N + 1]


def _em_core(s: complex, prec: float, deriv: int) -> complex:
    """Euler-Maclaurin value of zeta (deriv=0) or zeta' (deriv=1) at s.

    N is tied to |Im s| so each Bernoulli correction shrinks by a fixed
    factor ~(|s| / 2 pi N)^2 ~ 0.14; the loop stops once the computed
    remainder bound drops below prec.
    """
    sigma, t = s.real, s.imag
    N = max(24, ceil(0.43 * abs(t)), ceil(4.0 * abs(sigma)))
    for _ in range(4):
        val = _em_attempt(s, N, prec, deriv)
        if val is not None:
            return val
        N = int(N * 1.7) + 16
    raise ArithmeticError(f"euler-maclaurin failed to reach prec={prec} at s={s}")


def _em_attempt(s: complex, N: int, prec: float, deriv: int):
    sigma, t = s.real, s.imag
    log64, log128 = _logs(N)
    amp = np.exp(-sigma * log64[1:])
    if t == 0.0:
        terms = amp.astype(np.complex128)
    else:
        # phase reduced mod 2pi in 80-bit precision: the main rounding
        # hazard for large t is t*log n, not the summation itself
        phase = np.mod(np.float128(t) * log128[1 : N + 1], _TWO_PI_128).astype(np.float64)
        terms = amp * (np.cos(phase) - 1j * np.sin(phase))
    if deriv == 0:
        main = complex(np.sum(terms[::-1]))
    else:
        main = complex(-np.sum((terms * log64[1:])[::-1]))

    lnN = log64[N]
    NmS = complex(terms[-1])              # N^-s
    tail_pole = NmS * N / (s - 1.0)       # N^(1-s)/(s-1)
    if deriv == 0:
        out = main + tail_pole - 0.5 * NmS
    else:
        d_pole = -lnN * tail_pole - tail_pole / (s - 1.0)
        out = main + d_pole + 0.5 * lnN * NmS

    # Bernoulli corrections: term_k = B_{2k}/(2k)! * (s)_{2k-1} * N^(-s-2k+1)
    poch = s                      # (s)_1
    dpoch = 1.0 + 0.0j            # d/ds of the rising factorial
    Npow = NmS * N                # N^(-s+1) -> divided by N^2 each step
    scale = abs(out) + 1e-300
    k = 1
    converged = False
    while k <= 50:
        Npow = Npow / (N * N)     # N^(-s-2k+1)
        term = _B2K[k] * poch * Npow
        if deriv == 0:
            out += term
        else:
            out += _B2K[k] * (dpoch - poch * lnN) * Npow
        # remainder bound: first omitted term times |s+2k+1|/(sigma+2k+1)
        a = s + (2 * k - 1)
        b = s + 2 * k
        poch_n = poch * a * b
        dpoch_n = dpoch * a * b + poch * (a + b)
        if deriv == 0:
            nxt = abs(_B2K[k + 1] * poch_n * Npow) / (N * N)
        else:
            nxt = _B2K[k + 1] * (abs(dpoch_n) + abs(poch_n) * lnN) * abs(Npow) / (N * N)
        if k >= 2 and abs(nxt) * abs(b + 1.0) / max(sigma + 2 * k + 1.0, 0.5) < prec * max(1.0, 0.01 * scale):
            converged = True
            break
        dpoch = dpoch_n
        poch = poch_n
        k += 1
    return out if converged else None


def zeta_eval(s: complex, prec: float = 1e-12) -> complex:
    """Riemann zeta at s by Euler-Maclaurin continuation.

    Args:
        s: evaluation point, s != 1, |Im s| <= 1e6.
        prec: target absolute error, at least 1e-12.

    Raises:
        ZeroDivisionError: at the pole s = 1.
        ValueError: precision or height out of range.
    """
    s = complex(s)
    if s == 1.0:
        raise ZeroDivisionError("zeta has a pole at s = 1")
    if prec < MIN_PREC:
        raise ValueError(f"prec below supported floor {MIN_PREC}")
    if abs(s.imag) > MAX_IM:
        raise ValueError(f"|Im s| above supported ceiling {MAX_IM}")
    return _em_core(s, prec, deriv=0)


def zeta_prime_eval(s: complex, prec: float = 1e-12) -> complex:
    """Derivative of zeta at s, by term-differentiated Euler-Maclaurin."""
    s = complex(s)
    if s == 1.0:
        raise ZeroDivisionError("zeta' has a pole at s = 1")
    if prec < MIN_PREC:
        raise ValueError(f"prec below supported floor {MIN_PREC}")
    if abs(s.imag) > MAX_IM:
        raise ValueError(f"|Im s| above supported ceiling {MAX_IM}")
    return _em_core(s, prec, deriv=1)


def theta(t):
    """Riemann-Siegel theta: arg Gamma(1/4 + it/2) - (t/2) log pi.

    Scalar or array.  For t >= 16 the Stirling tail in 80-bit floats is
    accurate to ~1e-16 relative; below that the loggamma route is exact
    enough and avoids the asymptotic's breakdown.
    """
    if isinstance(t, float) and t >= 16.0:
        th = np.float128(t)
        t2 = th / 2.0
        val = t2 * np.log(th / _TWO_PI_128) - t2 - _PI_128 / 8.0
        val += 1.0 / (48.0 * th) + 7.0 / (5760.0 * th**3) + 31.0 / (80640.0 * th**5)
        return float(val)
    arr = np.asarray(t, dtype=np.float64)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.empty(arr.shape, dtype=np.float64)
    hi = arr >= 16.0
    if hi.any():
        th = arr[hi].astype(np.float128)
        t2 = th / 2.0
        out_hi = t2 * np.log(th / _TWO_PI_128) - t2 - _PI_128 / 8.0
        out_hi += 1.0 / (48.0 * th) + 7.0 / (5760.0 * th**3) + 31.0 / (80640.0 * th**5)
        out[hi] = out_hi.astype(np.float64)
    lo = ~hi
    if lo.any():
        z = 0.25 + 0.5j * arr[lo]
        out[lo] = loggamma(z).imag - 0.5 * arr[lo] * np.log(pi)
    return float(out[0]) if scalar else out


def _z_em(t: float, prec: float = 1e-13) -> float:
    """Z(t) through the rotated Euler-Maclaurin zeta value."""
    z = _em_core(0.5 + 1j * t, prec, deriv=0)
    th = theta(t)
    return (np.exp(1j * th) * z).real


_INVSQRT = np.zeros(1)


def _inv_sqrt(m: int) -> np.ndarray:
    global _INVSQRT
    if len(_INVSQRT) < m + 1:
        size = max(m + 1, 2 * len(_INVSQRT), 2048)
        n = np.arange(size, dtype=np.float64)
        n[0] = 1.0
        _INVSQRT = 1.0 / np.sqrt(n)
    return _INVSQRT[: m + 1]


def _rs_main_scalar(t: float) -> tuple[float, int, float]:
    """Riemann-Siegel main sum with 80-bit phases; returns (sum, m, p)."""
    tau = sqrt(t / TWO_PI)
    m = int(floor(tau))
    p = tau - m
    th = theta(t)
    _, log128 = _logs(m)
    phase = np.mod(np.float128(th) - np.float128(t) * log128[1 : m + 1],
                   _TWO_PI_128).astype(np.float64)
    return 2.0 * float(np.sum(np.cos(phase) * _inv_sqrt(m)[1:])), m, p


def _rs_correction(m, p, tau):
    z = 2.0 * p - 1.0
    x = 1.0 / tau
    corr = chebval(z, CHEB[NUM_TERMS - 1])
    for j in range(NUM_TERMS - 2, -1, -1):
        corr = corr * x + chebval(z, CHEB[j])
    sign = np.where(m % 2 == 1, 1.0, -1.0)
    return sign * np.sqrt(x) * corr


def hardy_Z(t: float) -> float:
    """Hardy's Z function: real, with |Z(t)| = |zeta(1/2 + it)|.

    Riemann-Siegel main sum plus seven correction terms for
    t >= RS_CUTOFF, rotated Euler-Maclaurin below.

    Args:
        t: ordinate, t >= 2.
    """
    if t < 2.0:
        raise ValueError("hardy_Z requires t >= 2")
    if t < RS_CUTOFF:
        return _z_em(float(t))
    main, m, p = _rs_main_scalar(float(t))
    tau = sqrt(t / TWO_PI)
    return main + float(_rs_correction(m, p, tau))


def hardy_Z_many(ts: np.ndarray) -> np.ndarray:
    """Vectorized Z over an array of ordinates (used by zero scans).

    Equivalent to calling hardy_Z pointwise up to float64 phase
    rounding, which stays below ~2e-11 for t <= 1e4 and ~2e-9 at 1e6;
    zero refinement re-evaluates through the scalar path anyway.
    """
    ts = np.asarray(ts, dtype=np.float64)
    out = np.empty_like(ts)
    lo = ts < RS_CUTOFF
    for i in np.nonzero(lo)[0]:
        out[i] = hardy_Z(ts[i])
    hi = ~lo
    if not hi.any():
        return out
    t = ts[hi]
    tau = np.sqrt(t / TWO_PI)
    m = np.floor(tau).astype(np.int64)
    p = tau - m
    th = theta(t)
    m_max = int(m.max())
    acc = np.zeros(t.shape)
    for n in range(1, m_max + 1):
        phase = th - t * np.log(float(n))
        term = np.cos(phase) / sqrt(n)
        if n > int(m.min()):
            term = np.where(m >= n, term, 0.0)
        acc += term
    out[hi] = 2.0 * acc + _rs_correction(m, p, tau)
    return out
