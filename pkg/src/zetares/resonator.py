"""Resonator coefficients, resonance quadratic forms, and window Euler products.

The resonator is the multiplicative function f supported on squarefree
products of primes in the window [L^2, exp((log L)^2)] with
f(p) = L / (sqrt(p) log p), L = sqrt(logM loglogM).  At desk scale the
window is empty below logM ~ 20 and M itself is notional (e.g. e^400),
so the quadratic-form side works with explicit coefficient vectors
capped at M_cap while the Euler-product side works directly from logM.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import exp, isqrt, log, sqrt
from typing import Iterable

import numpy as np
from scipy.integrate import quad
from scipy.sparse import csr_matrix

from . import arith
from .arith import ArithFunctionTable

__all__ = [
    "ResonatorParams",
    "Resonator",
    "QuadFormReport",
    "DegenerateInputError",
    "ResourceLimitError",
    "make_params",
    "resonator_coeff",
    "build_resonator",
    "quadform",
    "weighted_quadform",
    "pair_sum",
    "euler_products",
    "eigen_optimal_ratio",
    "lemma_reso_sums",
]

E = 2.718281828459045
EXACT_SIEVE_BUDGET = 1.0e9


class DegenerateInputError(ValueError):
    """Coefficient vector carries no mass."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds the configured enumeration budget."""


@dataclass(frozen=True)
class ResonatorParams:
    logM: float
    L: float
    support_lo: float
    support_hi: float
    mode: str
    empty_window: bool

    def window_primes(self, cap: float = float("inf")) -> np.ndarray:
        """Window primes up to cap, for enumerable windows."""
        hi = min(self.support_hi, cap)
        if self.empty_window or hi < self.support_lo:
            return np.empty(0, dtype=np.int64)
        if hi > 1e8:
            raise ResourceLimitError("window too large to materialize; "
                                     "use the blockwise prime iterator")
        out = [blk for blk in arith.iter_primes_in_range(self.support_lo, hi)]
        return np.concatenate(out) if out else np.empty(0, dtype=np.int64)


def _window_has_prime(lo: float, hi: float) -> bool:
    if hi < lo or hi < 2.0:
        return False
    if hi - lo >= 1500.0:
        # prime gaps below 10^18 never exceed ~1500
        return True
    lo_i, hi_i = int(np.ceil(lo)), int(np.floor(hi))
    if hi_i < lo_i:
        return False
    for blk in arith.iter_primes_in_range(lo_i, hi_i):
        if len(blk):
            return True
    return False


def make_params(logM: float, mode: str = "asymptotic",
                window: tuple[float, float] | None = None) -> ResonatorParams:
    """Resonator parameters for a (possibly notional) length logM.

    Args:
        logM: log of the resonator length; must exceed e.
        mode: "asymptotic" derives the prime window from logM;
            "windowed" takes an explicit (p_lo, p_hi); "eigen" carries
            no window (spectral experiments only).
        window: required iff mode == "windowed".
    """
    if not logM > E:
        raise ValueError("logM must exceed e so loglogM is positive")
    L = sqrt(logM * log(logM))
    if mode == "asymptotic":
        lo = L * L
        try:
            hi = exp(log(L) ** 2)
        except OverflowError:
            hi = float("inf")
        empty = not _window_has_prime(lo, hi)
        return ResonatorParams(logM, L, lo, hi, mode, empty)
    if mode == "windowed":
        if window is None:
            raise ValueError("windowed mode needs an explicit (p_lo, p_hi)")
        lo, hi = float(window[0]), float(window[1])
        return ResonatorParams(logM, L, lo, hi, mode,
                               not _window_has_prime(lo, hi))
    if mode == "eigen":
        return ResonatorParams(logM, L, 0.0, 0.0, mode, True)
    raise ValueError(f"unknown mode {mode!r}")


def _f_prime(p: float, L: float) -> float:
    return L / (sqrt(p) * log(p))


def resonator_coeff(n: int, params: ResonatorParams) -> float:
    """Multiplicative f(n); zero off squarefree window-prime products."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1.0
    if params.empty_window:
        return 0.0
    out = 1.0
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0.0
            if not (params.support_lo <= d <= params.support_hi):
                return 0.0
            out *= _f_prime(float(d), params.L)
        d += 1
    if m > 1:
        if not (params.support_lo <= m <= params.support_hi):
            return 0.0
        out *= _f_prime(float(m), params.L)
    return out


@dataclass(frozen=True)
class Resonator:
    params: ResonatorParams
    M_cap: int
    coeffs: dict[int, float]

    def coeff_array(self) -> np.ndarray:
        out = np.zeros(self.M_cap + 1)
        for n, v in self.coeffs.items():
            out[n] = v
        return out

    def dump_csv(self, path) -> None:
        with open(path, "w") as fh:
            fh.write("n,f\n")
            for n in sorted(self.coeffs):
                fh.write(f"{n},{self.coeffs[n]:.15g}\n")


def build_resonator(params: ResonatorParams, M_cap: int) -> Resonator:
    """Enumerate f on squarefree window-prime products up to M_cap."""
    if M_cap < 1:
        raise ValueError("M_cap must be positive")
    if M_cap > 10**7:
        raise ResourceLimitError("enumeration cap is 10^7")
    coeffs = {1: 1.0}
    if params.empty_window:
        return Resonator(params, M_cap, coeffs)
    ps = params.window_primes(cap=M_cap)
    fs = [_f_prime(float(p), params.L) for p in ps]

    def extend(start: int, n: int, fn: float) -> None:
        for i in range(start, len(ps)):
            m = n * int(ps[i])
            if m > M_cap:
                break
            coeffs[m] = fn * fs[i]
            extend(i + 1, m, fn * fs[i])

    extend(0, 1, 1.0)
    return Resonator(params, M_cap, coeffs)


# ---------------------------------------------------------------------------
# resonance quadratic forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadFormReport:
    B: float
    N: float
    ratio: float
    M_cap: int


def _as_coeffs(x, M: int) -> np.ndarray:
    """Normalize input to a 1-indexed array of length M + 1."""
    if isinstance(x, ArithFunctionTable):
        v = x.values
        if len(v) < M + 1:
            raise ValueError("table shorter than M")
        return np.asarray(v[: M + 1], dtype=np.float64)
    if isinstance(x, dict):
        out = np.zeros(M + 1)
        for n, val in x.items():
            if 1 <= n <= M:
                out[n] = val
        return out
    arr = np.asarray(x, dtype=np.float64)
    if len(arr) == M + 1:
        out = arr.copy()
        out[0] = 0.0
        return out
    if len(arr) >= M:
        out = np.zeros(M + 1)
        out[1 : M + 1] = arr[:M]
        return out
    out = np.zeros(M + 1)
    out[1 : len(arr) + 1] = arr
    return out


def pair_sum(xv: np.ndarray, wv: np.ndarray, M: int) -> float:
    """sum over pairs n*u <= M of x_u x_{nu} w_n, by a sqrt-split schedule.

    Both arrays are 1-indexed with length >= M + 1.  The loop order is
    fixed, so the reduction is deterministic.
    """
    K = isqrt(M)
    acc = 0.0
    for n in range(1, K + 1):
        Ln = M // n
        acc += wv[n] * float(np.dot(xv[1 : Ln + 1], xv[n :: n][:Ln]))
    u_hi = M // (K + 1)
    for u in range(1, u_hi + 1):
        n_hi = M // u
        cnt = n_hi - K
        if cnt > 0:
            acc += xv[u] * float(
                np.dot(xv[u * (K + 1) :: u][:cnt], wv[K + 1 : n_hi + 1]))
    return acc


def quadform(x, M: int) -> QuadFormReport:
    """Resonance quadratic form: B = sum_{nu<=M} x_u x_{nu}/sqrt(n), N = sum x_n^2."""
    if M < 1:
        raise ValueError("M must be positive")
    if M > 10**7:
        raise ResourceLimitError("pair enumeration cap is 10^7")
    xv = _as_coeffs(x, M)
    N = float(np.dot(xv, xv))
    if N == 0.0:
        raise DegenerateInputError("all-zero coefficient vector")
    n = np.arange(M + 1, dtype=np.float64)
    n[0] = 1.0
    B = pair_sum(xv, 1.0 / np.sqrt(n), M)
    return QuadFormReport(B=B, N=N, ratio=B / N, M_cap=M)


def weighted_quadform(x, M: int, i: int = 0, weight: str = "log") -> float:
    """Pair sum with weight (log n)^i, (Lambda*log)(n), or Lambda(n), over sqrt(n).

    weight selects the n-dependent numerator factor:
        "log": (log n)^i with i in {0, 1, 2}
        "lambda_log": (Lambda * log)(n)
        "lambda": Lambda(n)
    """
    if M < 1:
        raise ValueError("M must be positive")
    if M > 10**7:
        raise ResourceLimitError("pair enumeration cap is 10^7")
    xv = _as_coeffs(x, M)
    if not np.any(xv):
        raise DegenerateInputError("all-zero coefficient vector")
    n = np.arange(M + 1, dtype=np.float64)
    n[0] = 1.0
    if weight == "log":
        if i not in (0, 1, 2):
            raise ValueError("i must be 0, 1, or 2")
        wv = np.log(n) ** i if i else np.ones(M + 1)
    elif weight == "lambda_log":
        table = arith.build_prime_table(max(M, 2))
        lam = arith.vonmangoldt_table(table)
        logs = arith.log_power_table(1, max(M, 2))
        wv = arith.dirichlet_convolve(lam, logs, M).values.copy()
    elif weight == "lambda":
        table = arith.build_prime_table(max(M, 2))
        wv = arith.vonmangoldt_table(table).values.copy()
    else:
        raise ValueError(f"unknown weight {weight!r}")
    wv = wv[: M + 1] / np.sqrt(n)
    wv[0] = 0.0
    return pair_sum(xv, wv, M)


# ---------------------------------------------------------------------------
# window Euler products
# ---------------------------------------------------------------------------

def _log_local_terms(p: np.ndarray, L: float) -> tuple[np.ndarray, np.ndarray]:
    fp = L / (np.sqrt(p) * np.log(p))
    f2 = fp * fp
    return np.log1p(f2 + fp / np.sqrt(p)), np.log1p(f2)


def euler_products(params: ResonatorParams,
                   prime_mode: str = "exact_sieve") -> tuple[float, float, float]:
    """(log Q1, log Q2, predicted) for the window products.

    Q1 multiplies 1 + f(p)^2 + f(p)/sqrt(p), Q2 multiplies 1 + f(p)^2,
    over window primes.  exact_sieve enumerates primes (budget 1e9);
    pnt_integral integrates against the prime density dt/log t, which
    extends the trend checks to notionally huge logM.  The predicted
    scale for log(Q1/Q2) is sqrt(logM/loglogM).
    """
    predicted = sqrt(params.logM / log(params.logM))
    if params.empty_window:
        return 0.0, 0.0, predicted
    if prime_mode == "exact_sieve":
        if params.support_hi > EXACT_SIEVE_BUDGET:
            raise ResourceLimitError(
                f"window top {params.support_hi:.3g} exceeds the sieve "
                f"budget {EXACT_SIEVE_BUDGET:.0g}; use prime_mode='pnt_integral'")
        q1 = 0.0
        q2 = 0.0
        for blk in arith.iter_primes_in_range(params.support_lo,
                                              params.support_hi):
            t1, t2 = _log_local_terms(blk.astype(np.float64), params.L)
            q1 += float(np.sum(t1))
            q2 += float(np.sum(t2))
        return q1, q2, predicted
    if prime_mode == "pnt_integral":
        lgL = log(params.L)
        v_lo, v_hi = log(params.support_lo), lgL * lgL
        if params.mode == "windowed":
            v_hi = log(params.support_hi)

        def q1_density(v):
            f2 = np.exp(2.0 * (lgL - np.log(v)) - v)
            fs = np.exp(lgL - np.log(v) - v)
            return np.log1p(f2 + fs) * np.exp(v) / v

        def q2_density(v):
            f2 = np.exp(2.0 * (lgL - np.log(v)) - v)
            return np.log1p(f2) * np.exp(v) / v

        q1 = quad(q1_density, v_lo, v_hi, limit=400, epsrel=1e-10)[0]
        q2 = quad(q2_density, v_lo, v_hi, limit=400, epsrel=1e-10)[0]
        return q1, q2, predicted
    raise ValueError(f"unknown prime_mode {prime_mode!r}")


# ---------------------------------------------------------------------------
# spectral oracle
# ---------------------------------------------------------------------------

def _divisor_pair_matrix(M: int) -> csr_matrix:
    rows, cols, vals = [], [], []
    for a in range(1, M + 1):
        rows.append(a - 1)
        cols.append(a - 1)
        vals.append(1.0)
        for b in range(2 * a, M + 1, a):
            w = 0.5 * sqrt(a / b)
            rows.extend((a - 1, b - 1))
            cols.extend((b - 1, a - 1))
            vals.extend((w, w))
    return csr_matrix((vals, (rows, cols)), shape=(M, M))


def eigen_optimal_ratio(M: int) -> tuple[float, np.ndarray]:
    """Exact finite-M optimum of the resonance ratio, by power iteration.

    The symmetric matrix has unit diagonal and entry half sqrt(a/b) at
    divisor pairs a | b; its top eigenpair dominates every explicit
    coefficient vector's quadform ratio.  Deterministic all-ones start,
    residual target 1e-10.
    """
    if not 1 <= M <= 5000:
        raise ResourceLimitError("spectral oracle supports 1 <= M <= 5000")
    A = _divisor_pair_matrix(M)
    x = np.ones(M) / sqrt(M)
    lam = 1.0
    for it in range(200000):
        y = A @ x
        lam = float(np.dot(x, y))
        ny = float(np.linalg.norm(y))
        if ny == 0.0:
            break
        y /= ny
        if it % 8 == 7:
            resid = float(np.linalg.norm(A @ y - lam * y))
            if resid <= 1e-10:
                x = y
                break
        x = y
    lam = float(np.dot(x, A @ x) / np.dot(x, x))
    if x.sum() < 0:
        x = -x
    return lam, x


# ---------------------------------------------------------------------------
# window sum checks
# ---------------------------------------------------------------------------

def lemma_reso_sums(kind: str, params: ResonatorParams,
                    M_cap: int) -> tuple[float, float]:
    """Direct window sums paired with their product bound or scale.

    kind "i":  sum over pairs nu <= M_cap of f(u) f(nu)/sqrt(n), vs Q1.
    kind "ii": sum of f(n)^2, vs Q2 (a true upper bound).
    kind "iv_1"/"iv_2": sum of Lambda_i(a) f(a)/(sqrt(a) g(a)) with
        g(p) = 1 + f(p)^2 multiplicative, vs the desk proxy
        (logM)^{i/2} for the (log T)^{i/2+eps} bound.
    Product bounds are truncated to window primes <= M_cap so both
    sides enumerate the same primes.  Empty window: sums degenerate to
    the n = 1 term (1 for i/ii, 0 for iv).
    """
    if M_cap < 1:
        raise ValueError("M_cap must be positive")
    if kind not in ("i", "ii", "iv_1", "iv_2"):
        raise ValueError(f"unknown kind {kind!r}")
    reso = build_resonator(params, M_cap)
    L = params.L
    ps = params.window_primes(cap=M_cap)
    fs = np.array([_f_prime(float(p), L) for p in ps])
    if kind in ("i", "ii"):
        if kind == "ii":
            numeric = sum(v * v for v in reso.coeffs.values())
            bound = float(np.sum(np.log1p(fs * fs))) if len(ps) else 0.0
            return numeric, exp(bound)
        numeric = 0.0
        items = sorted(reso.coeffs.items())
        for m, fm in items:
            for u, fu in items:
                if u > m:
                    break
                if m % u == 0 and reso.coeffs.get(m // u) is not None:
                    n = m // u
                    # f supported on squarefree products: u and n=m/u are
                    # both support members whenever m is
                    numeric += fu * fm / sqrt(n)
        t1, _ = _log_local_terms(ps.astype(np.float64), L) if len(ps) else (np.zeros(0), None)
        return numeric, exp(float(np.sum(t1))) if len(ps) else 1.0
    i_idx = 1 if kind == "iv_1" else 2
    predicted = params.logM ** (i_idx / 2.0)
    if params.empty_window or len(ps) == 0:
        return 0.0, predicted
    g1 = 1.0 + fs * fs
    if kind == "iv_1":
        numeric = float(np.sum(np.log(ps) * fs / (np.sqrt(ps) * g1)))
        return numeric, predicted
    # Lambda_2 lives on p (weight log^2 p) and pq (weight 2 log p log q)
    lp = np.log(ps.astype(np.float64))
    numeric = float(np.sum(lp * lp * fs / (np.sqrt(ps) * g1)))
    for ia in range(len(ps)):
        pa = int(ps[ia])
        for ib in range(ia + 1, len(ps)):
            a = pa * int(ps[ib])
            if a > M_cap:
                break
            fa = fs[ia] * fs[ib]
            ga = g1[ia] * g1[ib]
            numeric += 2.0 * lp[ia] * lp[ib] * fa / (sqrt(a) * ga)
    return numeric, predicted
