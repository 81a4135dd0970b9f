"""Zero localization on the critical line, with a persistent cache.

Scanning walks a grid of ~12 points per mean zero gap, brackets sign
changes of Z, and polishes each bracket to ~1e-10.  Completeness is
certified against the Riemann-von Mangoldt count; a deficit triggers
grid refinement (close pairs of zeros are the usual culprits) and a
persistent deficit raises IncompleteScanError rather than silently
returning a thin record set.

Polished ordinates are canonicalized: the final Newton steps restart
from the value rounded to 1e-6, so the result is a function of the
zero alone, not of the grid that found it.  Scans over overlapping
ranges therefore agree bit for bit, and cache merges are exact.

Cache files are little-endian: an (magic, version, T_max, count,
checksum) header followed by fixed-width (index, gamma, abs_error)
records.  The checksum is CRC32 over the record bytes.
"""

from __future__ import annotations

import io
import logging
import os
import struct
import zlib
from dataclasses import dataclass, field
from math import ceil, log, pi

import numpy as np

from .zeta import hardy_Z, hardy_Z_many

__all__ = [
    "ZeroRecord",
    "ZeroCache",
    "IncompleteScanError",
    "NeedsScanError",
    "rvm_count",
    "mean_gap",
    "find_zeros",
    "good_ordinate",
    "cache_dir",
]

log_ = logging.getLogger(__name__)

TWO_PI = 2.0 * pi

MAGIC = b"ZRSCACHE"
CACHE_VERSION = 2
# magic, version, t_start, T_max, count, checksum
_HEADER = struct.Struct("<8sIddQI")
_RECORD = struct.Struct("<qdd")        # index, gamma, abs_error

CACHE_ENV_VAR = "ZETARES_CACHE_DIR"

GRID_PER_GAP = 12          # scan points per mean zero gap
MAX_REFINES = 4            # each refinement divides the step by 4
DEFICIT_SOFT = 0.75        # cumulative count deficit that triggers refinement
DEFICIT_HARD = 1.75        # deficit that is unexplainable by S(T) fluctuation
ERR_FLOOR = 1e-10          # reported error never below evaluator noise


class IncompleteScanError(RuntimeError):
    """Zero count still short of the Riemann-von Mangoldt prediction."""


class NeedsScanError(RuntimeError):
    """Requested ordinate lies outside the cached range."""


def rvm_count(T: float) -> float:
    """Riemann-von Mangoldt zero-count main term (T/2pi) log(T/2pi e) + 7/8."""
    if T <= 0.0:
        return 0.0
    return T / TWO_PI * log(T / (TWO_PI * np.e)) + 7.0 / 8.0


def mean_gap(T: float) -> float:
    """Local average spacing of zeros near height T."""
    return TWO_PI / log(max(T, 10.0) / TWO_PI)


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    gamma: float
    abs_error: float

    def __post_init__(self) -> None:
        if not (self.gamma > 0.0):
            raise ValueError("zero ordinate must be positive")
        if not (0.0 <= self.abs_error <= 1e-8):
            raise ValueError(f"abs_error {self.abs_error} outside [0, 1e-8]")


@dataclass
class ZeroCache:
    """Ordered zero records covering (t_start, T_max]."""

    T_max: float
    records: list[ZeroRecord] = field(default_factory=list)
    t_start: float = 0.0

    def __post_init__(self) -> None:
        gam = [r.gamma for r in self.records]
        if any(b <= a for a, b in zip(gam, gam[1:])):
            raise ValueError("records must be strictly increasing in gamma")

    def __len__(self) -> int:
        return len(self.records)

    @property
    def gammas(self) -> np.ndarray:
        return np.array([r.gamma for r in self.records])

    @property
    def checksum(self) -> int:
        return zlib.crc32(self._record_bytes())

    def count_below(self, T: float) -> int:
        return int(np.searchsorted(self.gammas, T, side="right"))

    def _record_bytes(self) -> bytes:
        buf = io.BytesIO()
        for r in self.records:
            buf.write(_RECORD.pack(r.index, r.gamma, r.abs_error))
        return buf.getvalue()

    def save(self, path: str | os.PathLike) -> None:
        body = self._record_bytes()
        head = _HEADER.pack(MAGIC, CACHE_VERSION, self.t_start, self.T_max,
                            len(self.records), zlib.crc32(body))
        with open(path, "wb") as fh:
            fh.write(head)
            fh.write(body)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "ZeroCache":
        with open(path, "rb") as fh:
            raw = fh.read()
        if len(raw) < _HEADER.size:
            raise ValueError("cache file truncated before header")
        magic, version, t_start, t_max, count, crc = _HEADER.unpack_from(raw)
        if magic != MAGIC:
            raise ValueError("bad magic; not a zero cache file")
        if version != CACHE_VERSION:
            raise ValueError(f"unsupported cache version {version}")
        body = raw[_HEADER.size:]
        if len(body) != count * _RECORD.size:
            raise ValueError("cache file truncated or padded")
        if zlib.crc32(body) != crc:
            raise ValueError("cache checksum mismatch")
        recs = [ZeroRecord(*_RECORD.unpack_from(body, i * _RECORD.size))
                for i in range(count)]
        return cls(T_max=t_max, records=recs, t_start=t_start)

    def export_csv(self, path: str | os.PathLike) -> None:
        with open(path, "w") as fh:
            fh.write("index,gamma\n")
            for r in self.records:
                fh.write(f"{r.index},{r.gamma:.10f}\n")

    def merge(self, other: "ZeroCache") -> "ZeroCache":
        """Union of two segments; duplicate ordinates must agree exactly."""
        by_gamma: dict[float, ZeroRecord] = {}
        for r in self.records + other.records:
            prev = by_gamma.get(r.gamma)
            if prev is not None and prev.index != r.index:
                raise ValueError(f"conflicting indices at gamma={r.gamma}")
            by_gamma[r.gamma] = r
        recs = sorted(by_gamma.values(), key=lambda r: r.gamma)
        idx = [r.index for r in recs]
        if any(b != a + 1 for a, b in zip(idx, idx[1:])):
            raise ValueError("merged segments leave an index gap")
        return ZeroCache(T_max=max(self.T_max, other.T_max), records=recs,
                         t_start=min(self.t_start, other.t_start))

    def verify_rvm(self) -> float:
        """Max |count(T) - RvM(T)| over all record heights; must be <= ~1."""
        worst = 0.0
        if self.t_start > 14.0:
            return worst        # partial segment: absolute counts unknown
        for k, r in enumerate(self.records):
            worst = max(worst, abs((k + 1) - rvm_count(r.gamma + 1e-9)))
        return worst


def _polish_canonical(t0: float) -> tuple[float, float]:
    """Deterministic final refinement; returns (gamma, abs_error).

    Restarts from t0 rounded to 1e-6 so any bracket that isolated this
    zero produces identical bits.
    """
    ta = round(t0 * 1e6) / 1e6
    tb = ta + 1e-6
    fa, fb = hardy_Z(ta), hardy_Z(tb)
    slope = (fb - fa) / (tb - ta)
    t, ft = (ta, fa) if abs(fa) < abs(fb) else (tb, fb)
    for _ in range(6):
        if slope == 0.0:
            break
        t_new = t - ft / slope
        f_new = hardy_Z(t_new)
        if t_new != t:
            slope = (f_new - ft) / (t_new - t)
        dt = abs(t_new - t)
        t, ft = t_new, f_new
        if dt < 1e-12:
            break
    err = max(ERR_FLOOR, 2.0 * abs(ft / slope)) if slope != 0.0 else 1e-9
    return t, min(err, 1e-8)


def _bisect_batch(lo: np.ndarray, hi: np.ndarray, flo: np.ndarray) -> np.ndarray:
    """Vectorized bisection of many brackets down to width ~1e-8."""
    lo, hi, flo = lo.copy(), hi.copy(), flo.copy()
    for _ in range(32):
        if (hi - lo).max() < 1e-8:
            break
        mid = 0.5 * (lo + hi)
        fm = hardy_Z_many(mid)
        left = np.signbit(flo) != np.signbit(fm)
        hi = np.where(left, mid, hi)
        lo = np.where(left, lo, mid)
        flo = np.where(left, flo, fm)
    return 0.5 * (lo + hi)


def _scan_block(a: float, b: float, h: float) -> list[float]:
    """Polished zeros of Z in (a, b], grid step <= h."""
    n = max(2, ceil((b - a) / h) + 1)
    ts = np.linspace(a, b, n)
    zs = hardy_Z_many(ts)
    neg = np.signbit(zs)
    idx = np.nonzero(neg[1:] != neg[:-1])[0]
    out = []
    if len(idx):
        mids = _bisect_batch(ts[idx], ts[idx + 1], zs[idx])
        for t0 in mids:
            gam, err = _polish_canonical(float(t0))
            if a < gam <= b:
                out.append((gam, err))
    # canonical polish can land twice on the same zero from adjacent cells
    out.sort()
    dedup = [out[0]] if out else []
    for g, e in out[1:]:
        if g - dedup[-1][0] > 1e-9:
            dedup.append((g, e))
    return dedup


def find_zeros(T1: float, T2: float) -> ZeroCache:
    """All zeros of Z in (T1, T2], certified against the zero-count formula.

    Args:
        T1, T2: scan range, 2 <= T1 < T2 <= 1e6.

    Returns:
        ZeroCache segment with 1-based global indices (exact when the
        scan starts below the first zero, count-formula based otherwise).

    Raises:
        IncompleteScanError: count deficit survives maximum refinement.
    """
    if not (2.0 <= T1 < T2 <= 1e6):
        raise ValueError("require 2 <= T1 < T2 <= 1e6")
    base_index = int(round(rvm_count(T1))) if T1 > 14.0 else 0
    found: list[tuple[float, float]] = []
    a = T1
    while a < T2:
        gap = mean_gap(a + 50.0)
        h = gap / GRID_PER_GAP
        b = min(T2, a + max(4.0, 256.0 * gap))
        block = _scan_block(a, b, h)
        found.extend(block)
        # cumulative certification: observed count vs smooth count
        expected = rvm_count(b) - rvm_count(T1)
        deficit = expected - len(found)
        refines = 0
        while deficit > DEFICIT_SOFT and refines < MAX_REFINES:
            refines += 1
            h /= 4.0
            log_.info("refining [%g, %g] at step %g (deficit %.2f)",
                      a, b, h, deficit)
            block = _scan_block(a, b, h)
            merged = {round(g, 9): (g, e) for g, e in found if not (a < g <= b)}
            for g, e in block:
                merged[round(g, 9)] = (g, e)
            found = sorted(merged.values())
            deficit = expected - len(found)
        if deficit > DEFICIT_HARD:
            raise IncompleteScanError(
                f"zero scan of ({T1}, {b}] found {len(found)} zeros, "
                f"expected {expected:.2f}; deficit {deficit:.2f} after "
                f"{refines} refinements")
        a = b
    records = [ZeroRecord(index=base_index + k + 1, gamma=g, abs_error=e)
               for k, (g, e) in enumerate(found)]
    return ZeroCache(T_max=T2, records=records, t_start=T1)


def good_ordinate(T_target: float, cache: ZeroCache) -> float:
    """Height near T_target well separated from every zero.

    Midpoint of the zero gap containing T_target; when that gap is
    anomalously tight (close pair), the better adjacent gap within one
    mean spacing is used instead.  Idempotent: feeding the result back
    returns it unchanged.

    Raises:
        NeedsScanError: cache does not cover T_target's neighborhood.
    """
    gam = cache.gammas
    lo = max(cache.t_start, gam[0] if len(gam) else np.inf)
    if len(gam) < 2 or not (lo <= T_target <= cache.T_max):
        raise NeedsScanError(
            f"cache covers ({cache.t_start}, {cache.T_max}] with {len(gam)} "
            f"records; cannot pick an ordinate near {T_target}")
    i = int(np.searchsorted(gam, T_target))
    i = min(max(i, 1), len(gam) - 1)
    gaps = [(gam[j - 1], gam[j]) for j in (i - 1, i, i + 1)
            if 1 <= j < len(gam)]
    g_lo, g_hi = gam[i - 1], gam[i]
    local = mean_gap(T_target)
    if g_hi - g_lo < 0.3 * local:
        best = max(gaps, key=lambda ab: ab[1] - ab[0])
        if 0.5 * (best[0] + best[1]) - T_target <= 1.5 * local:
            g_lo, g_hi = best
    tj = 0.5 * (g_lo + g_hi)
    log_.info("good ordinate %f near %f: |Z| = %.3g, half-gap %.3g",
              tj, T_target, abs(hardy_Z(tj)), 0.5 * (g_hi - g_lo))
    return tj


def cache_dir() -> str:
    """Directory for persisted zero caches, from the environment or CWD."""
    d = os.environ.get(CACHE_ENV_VAR)
    if not d:
        d = os.path.join(os.getcwd(), ".zetares-cache")
    os.makedirs(d, exist_ok=True)
    return d
