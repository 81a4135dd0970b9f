"""Exact integer arithmetic-function layer.

Smallest-prime-factor sieve, factorization, and the multiplicative
functions used throughout the mean-value computations: the Mobius
function, k-fold divisor functions tau_k, generalized von Mangoldt
functions Lambda_k, Dirichlet convolution, and the shift functions
f1, f2 built from local tau_r series.

All tables are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, isqrt, log
from typing import Iterator

import numpy as np

__all__ = [
    "PrimeTable",
    "Factorization",
    "ArithFunctionTable",
    "build_prime_table",
    "factorize",
    "mobius",
    "omega",
    "tau_k",
    "lambda_k",
    "dirichlet_convolve",
    "f_shift",
    "mobius_table",
    "tau_k_table",
    "log_power_table",
    "vonmangoldt_table",
    "lambda_k_table",
    "f_shift_table",
    "primes_up_to",
    "iter_primes_in_range",
    "sum_over_primes",
]

# Relative truncation threshold for the local series in f1/f2 and the
# Euler-product constants.  Terms decay at least geometrically in p^-j.
LOCAL_SERIES_EPS = 1e-14

# Largest magnitude allowed in an int64-backed table before the fill
# switches to a checked error.  tau_k values stay far below this for
# every practical (N, k).
_INT64_GUARD = 2**62


@dataclass(frozen=True)
class PrimeTable:
    """Smallest-prime-factor table for 2 <= n <= limit.

    Attributes:
        limit: largest integer covered.
        spf: int array of length limit + 1; spf[n] is the smallest prime
            factor of n for n >= 2.  Entries 0 and 1 are unused.
    """

    limit: int
    spf: np.ndarray

    def __post_init__(self):
        self.spf.setflags(write=False)

    def is_prime(self, n: int) -> bool:
        self._check(n)
        return n >= 2 and int(self.spf[n]) == n

    def primes(self) -> np.ndarray:
        """All primes up to the table limit, increasing."""
        idx = np.arange(self.limit + 1, dtype=self.spf.dtype)
        out = np.nonzero(self.spf == idx)[0]
        return out[out >= 2]

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside table range [1, {self.limit}]")


@dataclass(frozen=True)
class Factorization:
    """Prime factorization n = prod p_i^e_i with p_i strictly increasing."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def omega(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)


@dataclass(frozen=True)
class ArithFunctionTable:
    """Dense table of an arithmetic function on 1..limit.

    Attributes:
        name: identifier for reports.
        values: array of length limit + 1; index 0 unused.
        support: short description of where the function is nonzero.
    """

    name: str
    values: np.ndarray
    support: str = "all n"

    def __post_init__(self):
        self.values.setflags(write=False)

    @property
    def limit(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int):
        return self.values[n]


def build_prime_table(N: int) -> PrimeTable:
    """Sieve smallest prime factors up to N.

    Args:
        N: table limit, at least 2.

    Returns:
        PrimeTable with spf filled for 2..N.
    """
    if N < 2:
        raise ValueError("prime table limit must be at least 2")
    spf = np.zeros(N + 1, dtype=np.int64)
    spf[1] = 1
    for p in range(2, isqrt(N) + 1):
        if spf[p] == 0:
            sl = spf[p * p :: p]
            sl[sl == 0] = p
    rest = np.nonzero(spf[2:] == 0)[0] + 2
    spf[rest] = rest
    return PrimeTable(limit=N, spf=spf)


def factorize(n: int, table: PrimeTable) -> Factorization:
    """Factor n by repeated smallest-prime-factor division."""
    table._check(n)
    facs = []
    m = n
    while m > 1:
        p = int(table.spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        facs.append((p, e))
    return Factorization(n=n, factors=tuple(facs))


def mobius(n: int, table: PrimeTable) -> int:
    """Mobius function: (-1)^omega(n) on squarefree n, else 0."""
    f = factorize(n, table)
    if not f.is_squarefree:
        return 0
    return -1 if f.omega % 2 else 1


def omega(n: int, table: PrimeTable) -> int:
    """Number of distinct prime factors of n."""
    return factorize(n, table).omega


def tau_k(n: int, k: int, table: PrimeTable) -> int:
    """k-fold divisor function, tau_k(p^e) = C(e + k - 1, k - 1).

    Exact integer arithmetic; the Dirichlet-series coefficient of
    zeta(s)^k at n^-s.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    out = 1
    for p, e in factorize(n, table).factors:
        out *= comb(e + k - 1, k - 1)
    return out


def lambda_k(n: int, k: int, table: PrimeTable) -> float:
    """Generalized von Mangoldt function Lambda_k = mu * log^k.

    Vanishes whenever n has more than k distinct prime factors.  Closed
    forms are used at small omega; the general case falls back to the
    defining divisor sum (only reachable for omega(n) <= k).
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    f = factorize(n, table)
    w = f.omega
    if w > k or n == 1:
        return 0.0
    if k == 1:
        p, e = f.factors[0]
        return log(p)
    if k == 2:
        if w == 1:
            p, e = f.factors[0]
            return (2 * e - 1) * log(p) ** 2
        (p, _), (q, _) = f.factors
        return 2.0 * log(p) * log(q)
    # mu * log^k over the divisor lattice of the squarefull part
    total = 0.0
    divs = [(1, 1)]
    for p, e in f.factors:
        divs = [(d * p**j, s * (-1 if j == 1 else 1))
                for d, s in divs for j in (0, 1)]
    for d, sign in divs:
        if sign != 0 and n % d == 0:
            total += sign * log(n // d) ** k if n // d > 1 else 0.0
    return total


def dirichlet_convolve(a: ArithFunctionTable, b: ArithFunctionTable,
                       N: int | None = None) -> ArithFunctionTable:
    """Dirichlet convolution c[n] = sum_{d|n} a[d] b[n/d] for n <= N.

    Uses the sqrt-split schedule: slices over multiples for d <= sqrt(N),
    then the transposed slices for the cofactor below sqrt(N).  Exact up
    to float accumulation.
    """
    if N is None:
        N = min(a.limit, b.limit)
    if a.limit < N or b.limit < N:
        raise ValueError("input tables shorter than requested limit")
    av = np.asarray(a.values[: N + 1], dtype=np.float64)
    bv = np.asarray(b.values[: N + 1], dtype=np.float64)
    c = np.zeros(N + 1)
    K = isqrt(N)
    for d in range(1, K + 1):
        if av[d] != 0.0:
            c[d :: d] += av[d] * bv[: N // d + 1][1:]
    for q in range(1, K + 1):
        if bv[q] != 0.0:
            lo = K + 1
            hi = N // q
            if hi >= lo:
                c[lo * q :: q] += bv[q] * av[lo : hi + 1]
    return ArithFunctionTable(name=f"({a.name})*({b.name})", values=c,
                              support="divisor-closed")


def _local_f1(p: int, e: int, r: int) -> float:
    """Local factor of f1 at p^e: ratio of shifted to plain tau_r series."""
    num = den = 0.0
    j = 0
    while True:
        tn = comb(e + j + r - 1, r - 1) / p**j
        td = comb(j + r - 1, r - 1) / p**j
        num += tn
        den += td
        j += 1
        if j > 4 and tn < LOCAL_SERIES_EPS * num:
            break
    return num / den


def _local_f2(p: int, e: int, r: int) -> float:
    """Local factor of f2 at p^e: shifted tau_r x tau_r series ratio."""
    num = den = 0.0
    j = 0
    while True:
        cj = comb(j + r - 1, r - 1)
        tn = comb(e + j + r - 1, r - 1) * cj / p**j
        td = cj * cj / p**j
        num += tn
        den += td
        j += 1
        if j > 4 and tn < LOCAL_SERIES_EPS * num:
            break
    return num / den


def f_shift(n: int, r: int, which: int, table: PrimeTable) -> float:
    """Shift function f1 or f2 evaluated at n.

    Multiplicative; the local factor at p^e || n is the ratio of the
    e-shifted local tau_r series to the unshifted one (which=1), or of
    the shifted tau_r x tau_r series to the squared one (which=2).
    f_i(1) = 1 and f_i(p) = r (1 + O(1/p)).
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    if r < 1:
        raise ValueError("r must be a positive integer")
    local = _local_f1 if which == 1 else _local_f2
    out = 1.0
    for p, e in factorize(n, table).factors:
        out *= local(p, e, r)
    return out


# ---------------------------------------------------------------------------
# dense tables
# ---------------------------------------------------------------------------

def _multiplicative_fill(table: PrimeTable, local) -> np.ndarray:
    """Fill values of a multiplicative function given its prime-power local().

    Walks n = 2..limit via the spf table, peeling the full power of the
    smallest prime; local(p, e) values are cached.
    """
    N = table.limit
    spf = table.spf
    vals = np.ones(N + 1)
    cache: dict[tuple[int, int], float] = {}
    for n in range(2, N + 1):
        p = int(spf[n])
        m = n
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        key = (p, e)
        v = cache.get(key)
        if v is None:
            v = local(p, e)
            cache[key] = v
        vals[n] = vals[m] * v
    return vals


def mobius_table(table: PrimeTable) -> ArithFunctionTable:
    """Mobius function on 1..limit via a vectorized squarefree sieve."""
    N = table.limit
    mu = np.ones(N + 1, dtype=np.int64)
    primes = table.primes()
    for p in primes:
        mu[p::p] *= -1
        p2 = p * p
        if p2 <= N:
            mu[p2::p2] = 0
    mu[0] = 0
    return ArithFunctionTable(name="mu", values=mu, support="squarefree n")


def tau_k_table(k: int, table: PrimeTable) -> ArithFunctionTable:
    """tau_k on 1..limit as exact int64 (guarded against overflow)."""
    if k < 1:
        raise ValueError("k must be a positive integer")

    def local(p, e):
        v = comb(e + k - 1, k - 1)
        if v > _INT64_GUARD:
            raise OverflowError("tau_k local value exceeds int64 guard")
        return float(v)

    vals = _multiplicative_fill(table, local)
    if vals.max() > _INT64_GUARD:
        raise OverflowError("tau_k table exceeds int64 guard")
    return ArithFunctionTable(name=f"tau_{k}", values=vals.astype(np.int64),
                              support="all n")


def log_power_table(k: int, N: int) -> ArithFunctionTable:
    """(log n)^k on 1..N; value 0 at n = 1."""
    v = np.zeros(N + 1)
    n = np.arange(2, N + 1, dtype=np.float64)
    v[2:] = np.log(n) ** k
    return ArithFunctionTable(name=f"log^{k}", values=v, support="n >= 2")


def vonmangoldt_table(table: PrimeTable) -> ArithFunctionTable:
    """von Mangoldt Lambda on 1..limit: log p at prime powers, else 0."""
    N = table.limit
    vals = np.zeros(N + 1)
    for p in table.primes():
        lp = log(p)
        q = int(p)
        while q <= N:
            vals[q] = lp
            q *= int(p)
    return ArithFunctionTable(name="Lambda", values=vals,
                              support="prime powers")


def lambda_k_table(k: int, table: PrimeTable,
                   lam: ArithFunctionTable | None = None) -> ArithFunctionTable:
    """Lambda_k on 1..limit via the recursion L_{k+1} = L_k log + L_k * Lambda.

    The convolution runs over the sparse supports (omega <= k integers
    against prime powers), which keeps the fill near-linear in practice.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    N = table.limit
    if lam is None:
        lam = vonmangoldt_table(table)
    if k == 1:
        return lam
    lower = lambda_k_table(k - 1, table, lam)
    logs = log_power_table(1, N).values
    out = lower.values * logs
    pp_idx = np.nonzero(lam.values)[0]
    pp_val = lam.values[pp_idx]
    lo_idx = np.nonzero(lower.values)[0]
    lo_val = lower.values[lo_idx]
    for q, v in zip(lo_idx, lo_val):
        lim = N // int(q)
        m = np.searchsorted(pp_idx, lim, side="right")
        if m:
            np.add.at(out, int(q) * pp_idx[:m], v * pp_val[:m])
    return ArithFunctionTable(name=f"Lambda_{k}", values=out,
                              support=f"omega(n) <= {k}")


def f_shift_table(r: int, which: int, table: PrimeTable) -> ArithFunctionTable:
    """Dense f1 or f2 table on 1..limit."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    local = _local_f1 if which == 1 else _local_f2
    vals = _multiplicative_fill(table, lambda p, e: local(p, e, r))
    return ArithFunctionTable(name=f"f{which}[r={r}]", values=vals,
                              support="all n")


# ---------------------------------------------------------------------------
# prime enumeration beyond table limits
# ---------------------------------------------------------------------------

def primes_up_to(N: int) -> np.ndarray:
    """Primes up to N by a plain boolean sieve (N <= ~10^8 sensible)."""
    if N < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(N + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, isqrt(N) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def iter_primes_in_range(lo: float, hi: float,
                         block: int = 10_000_000) -> Iterator[np.ndarray]:
    """Yield primes in [lo, hi] in increasing blocks (segmented sieve).

    Handles hi up to a few times 10^9; memory stays at one block of
    booleans plus the base primes below sqrt(hi).
    """
    lo_i = max(2, int(np.ceil(lo)))
    hi_i = int(np.floor(hi))
    if hi_i < lo_i:
        return
    base = primes_up_to(isqrt(hi_i))
    start = lo_i
    while start <= hi_i:
        end = min(start + block - 1, hi_i)
        mask = np.ones(end - start + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > end:
                break
            first = max(p * p, ((start + p - 1) // p) * p)
            mask[first - start :: p] = False
        if start <= 1:
            mask[: 2 - start] = False
        yield np.nonzero(mask)[0] + start
        start = end + 1


def sum_over_primes(lo: float, hi: float, fn,
                    block: int = 10_000_000) -> float:
    """Sum fn(p_array) over primes in [lo, hi] with blockwise reduction.

    fn receives a float64 array of primes and must return an array of
    summands; reduction order is fixed by the block schedule, so results
    are deterministic.
    """
    total = 0.0
    for chunk in iter_primes_in_range(lo, hi, block=block):
        total += float(np.sum(fn(chunk.astype(np.float64))))
    return total
