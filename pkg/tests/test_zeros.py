"""Zero scanning, caching, and ordinate selection.

Reference ordinates pinned from classical tables: the first three
zeros to 12 decimals, the count of 29 below 100, and the close pair
near 7005 whose gap is roughly 2% of the local mean spacing.
"""

import numpy as np
import pytest

from zetares import (NeedsScanError, ZeroCache, find_zeros, good_ordinate,
                     mean_gap, rvm_count)

GAMMA_1 = 14.134725141734694
GAMMA_2 = 21.022039638771555
GAMMA_3 = 25.010857580145688
LEHMER_LO = 7005.062866175
LEHMER_HI = 7005.100564674


@pytest.fixture(scope="module")
def low_zeros():
    return find_zeros(2.0, 100.0)


def test_count_and_first_ordinates(low_zeros):
    assert len(low_zeros) == 29
    g = low_zeros.gammas
    assert g[0] == pytest.approx(GAMMA_1, abs=1e-9)
    assert g[1] == pytest.approx(GAMMA_2, abs=1e-9)
    assert g[2] == pytest.approx(GAMMA_3, abs=1e-9)
    assert list(r.index for r in low_zeros.records) == list(range(1, 30))


def test_rvm_certification(low_zeros):
    assert low_zeros.verify_rvm() <= 1.0
    # count formula itself: N(100) ~ 28.8
    assert rvm_count(100.0) == pytest.approx(29.0, abs=1.0)
    assert low_zeros.count_below(50.0) == 10


def test_reported_errors_are_small(low_zeros):
    assert max(r.abs_error for r in low_zeros.records) <= 1e-9


def test_save_load_roundtrip(low_zeros, tmp_path):
    p = tmp_path / "seg.zrc"
    low_zeros.save(p)
    back = ZeroCache.load(p)
    assert back.T_max == low_zeros.T_max
    assert back.t_start == low_zeros.t_start
    assert np.array_equal(back.gammas, low_zeros.gammas)
    assert back.checksum == low_zeros.checksum
    assert back.verify_rvm() <= 1.0   # still certifiable after reload


def test_corrupt_cache_rejected(low_zeros, tmp_path):
    p = tmp_path / "seg.zrc"
    low_zeros.save(p)
    raw = bytearray(p.read_bytes())
    raw[-3] ^= 0x40
    p.write_bytes(bytes(raw))
    with pytest.raises(ValueError):
        ZeroCache.load(p)


def test_segment_merge_is_seamless(low_zeros):
    a = find_zeros(2.0, 60.0)
    b = find_zeros(60.0, 100.0)
    merged = a.merge(b)
    assert np.array_equal(merged.gammas, low_zeros.gammas)
    assert merged.verify_rvm() <= 1.0


def test_merge_rejects_index_gap():
    a = find_zeros(2.0, 40.0)
    c = find_zeros(60.0, 100.0)
    with pytest.raises(ValueError):
        a.merge(c)


def test_interior_segment_indices_absolute():
    seg = find_zeros(95.0, 120.0)
    # zeros 28 and 29 sit at 95.87 and 98.83
    assert seg.records[0].index == 28
    assert seg.records[0].gamma == pytest.approx(95.870634228, abs=1e-8)
    assert seg.records[1].index == 29
    assert seg.records[1].gamma == pytest.approx(98.831194218, abs=1e-8)


def test_good_ordinate_separation(low_zeros):
    t = good_ordinate(50.0, low_zeros)
    dist = np.min(np.abs(low_zeros.gammas - t))
    assert dist >= 0.25 * mean_gap(t)
    # idempotent
    assert good_ordinate(t, low_zeros) == t


def test_good_ordinate_avoids_close_pair():
    seg = find_zeros(7000.0, 7010.0)
    g = seg.gammas
    i_lo = int(np.argmin(np.abs(g - LEHMER_LO)))
    assert g[i_lo] == pytest.approx(LEHMER_LO, abs=1e-6)
    assert g[i_lo + 1] == pytest.approx(LEHMER_HI, abs=1e-6)
    pair_gap = g[i_lo + 1] - g[i_lo]
    assert pair_gap < 0.15 * mean_gap(7005.0)
    # a target inside the tight gap must get bumped to a wider one
    t = good_ordinate(0.5 * (LEHMER_LO + LEHMER_HI), seg)
    assert np.min(np.abs(g - t)) > pair_gap


def test_good_ordinate_needs_coverage(low_zeros):
    with pytest.raises(NeedsScanError):
        good_ordinate(5000.0, low_zeros)
    with pytest.raises(NeedsScanError):
        good_ordinate(5.0, low_zeros)


def test_range_validation():
    with pytest.raises(ValueError):
        find_zeros(1.0, 50.0)
    with pytest.raises(ValueError):
        find_zeros(100.0, 50.0)
